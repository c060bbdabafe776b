#include <reversor/json_io.hpp>

namespace reversor {

std::string_view certified_name(Certified c) noexcept {
    switch (c) {
    case Certified::less: return "less";
    case Certified::greater: return "greater";
    case Certified::indeterminate: return "indeterminate";
    }
    return "?";
}

std::string_view chain_name(Chain c) noexcept {
    switch (c) {
    case Chain::at_lower_bound: return "at_lower_bound";
    case Chain::strict_chain: return "strict";
    case Chain::at_upper_bound: return "at_upper_bound";
    }
    return "?";
}

namespace {

std::string_view ordering_name(std::strong_ordering o) {
    if (o < 0) {
        return "less";
    }
    return o > 0 ? "greater" : "equal";
}

} // namespace

Json to_json(const Rat &r) { return r.str(); }

Json to_json(const Nat &n) { return n.str(); }

Json to_json(const HiReal &v) {
    return Json{{"value", v.decimal()}, {"digits", v.digits()}, {"error_bound", v.error_string()}};
}

Json to_json(Certified c) { return std::string(certified_name(c)); }

Json to_json(const Triplet &t) { return Json::array({t.y.str(), t.x.str(), t.z.str()}); }

Json to_json(const TripletClass &c) {
    return Json{{"class", std::string(tag_name(c.tag))},
                {"set", std::string(c.table_label)},
                {"predicted_n", c.predicted.str()},
                {"z_equals_x", c.z_equals_x},
                {"x_equals_y", c.x_equals_y},
                {"note", c.note}};
}

Json to_json(const ReversionAnalysis &a) {
    Json j;
    j["n"] = a.n;
    j["strict_at_n_minus_1"] = a.strict_at_n_minus_1;
    j["p_n_minus_1"] = to_json(a.p_n_minus_1);
    j["p_n"] = to_json(a.p_n);
    j["z_pow_n_minus_1"] = to_json(a.z_pow_n_minus_1);
    j["z_pow_n"] = to_json(a.z_pow_n);
    j["k_n_minus_1"] = to_json(a.k_n_minus_1);
    j["phi"] = to_json(a.phi);
    j["lambda_max"] = to_json(a.lambda_interval.hi);
    j["rho_interval"] = Json::array({to_json(a.rho_interval.lo), to_json(a.rho_interval.hi)});
    j["lambda_interval"] = Json::array({to_json(a.lambda_interval.lo), to_json(a.lambda_interval.hi)});
    j["last_triangle"] = Json::array({to_json(a.last_triangle[0]), to_json(a.last_triangle[1]), to_json(a.last_triangle[2])});
    j["last_triangle_square_reversed"] = a.last_triangle_square_reversed;
    j["square_reversal_asserted"] = a.square_reversal_asserted;
    j["lambda_interval_nondegenerate"] = a.lambda_interval_nondegenerate;
    return j;
}

Json to_json(const OverreversionRecord &r) {
    return Json{{"rho", to_json(r.rho)},
                {"lambda", to_json(r.lambda)},
                {"zeta_n", to_json(r.zeta_n)},
                {"chain", std::string(chain_name(r.chain))}};
}

Json to_json(const Bound &b) {
    Json j;
    j["value"] = to_json(b.value);
    j["exact"] = b.exact ? Json(b.exact->str()) : Json(nullptr);
    j["vs_exponent"] = std::string(ordering_name(b.vs_exponent));
    j["numeric_agrees"] = b.numeric_agrees;
    return j;
}

Json to_json(const LogBoundsReport &r) {
    Json j;
    j["triplet"] = to_json(r.triplet);
    j["class"] = std::string(tag_name(r.tag));
    j["n"] = r.n;
    j["strict_at_n_minus_1"] = r.strict_at_n_minus_1;
    j["a"] = to_json(r.a);
    j["b"] = to_json(r.b);
    j["gap"] = to_json(r.gap);
    j["n_minus_b"] = to_json(r.n_minus_b);
    j["k_n_minus_1"] = to_json(r.k_n_minus_1);
    j["gap_in_unit"] = r.gap_in_unit;
    j["gap_above_half"] = r.gap_above_half;
    j["n_minus_b_below_half"] = r.n_minus_b_below_half;
    j["k_squared_above_z"] = r.k_squared_above_z;
    j["half_bounds_asserted"] = r.half_bounds_asserted;
    j["numeric_flags_agree"] = r.numeric_flags_agree;
    j["gap_identity_residual"] = to_json(r.gap_identity_residual);
    j["gap_identity_holds"] = r.gap_identity_holds;
    j["pythagorean"] = r.pythagorean;
    j["a_is_two"] = r.a_is_two;
    j["b_is_integer"] = r.b_is_integer;
    return j;
}

Json to_json(const EqualizerResult &r) {
    Json j;
    j["n"] = r.n;
    j["s"] = to_json(r.s);
    j["bracket"] = Json::array({to_json(r.lo), to_json(r.hi)});
    j["a"] = to_json(r.a);
    j["b"] = to_json(r.b);
    j["residual"] = to_json(r.residual);
    j["iterations"] = r.iterations;
    j["digits"] = r.digits;
    j["boundary_equality"] = r.boundary_equality;
    j["order"] = Json{{"n_minus_1_le_a", r.order.n1_le_a}, {"a_le_s", r.order.a_le_s}, {"s_le_b", r.order.s_le_b},
                      {"b_le_n", r.order.b_le_n},         {"n_minus_1_eq_a", r.order.n1_eq_a},
                      {"a_eq_s", r.order.a_eq_s},         {"s_eq_b", r.order.s_eq_b},
                      {"b_eq_n", r.order.b_eq_n}};
    j["ordering_ok"] = r.ordering_ok;
    j["residual_ok"] = r.residual_ok;
    return j;
}

Json to_json(const WitnessReport &r) {
    Json j;
    j["triplet"] = to_json(r.triplet);
    j["equilateral"] = r.equilateral;
    j["log2_over_log_z"] = r.log2_over_log_z ? to_json(*r.log2_over_log_z) : Json(nullptr);
    Json rows = Json::array();
    for (const auto &w : r.rows) {
        rows.push_back(Json{{"n", w.n},
                            {"b", to_json(w.b)},
                            {"exceeds_n", w.exceeds_n},
                            {"numeric_agrees", w.numeric_agrees},
                            {"excess_residual", w.excess_residual ? to_json(*w.excess_residual) : Json(nullptr)}});
    }
    j["rows"] = rows;
    j["all_exceed"] = r.all_exceed;
    return j;
}

Json to_json(const ScaledEquation &e) {
    Json j;
    j["n"] = e.n;
    j["z_int"] = to_json(e.z_int);
    j["x_int"] = to_json(e.x_int);
    j["y_int"] = to_json(e.y_int);
    j["lhs"] = to_json(e.lhs);
    j["rhs"] = to_json(e.rhs);
    j["rational_lhs"] = to_json(e.rational_lhs);
    j["rational_rhs"] = to_json(e.rational_rhs);
    j["equal"] = e.equal;
    j["certificate_ok"] = e.certificate_ok;
    j["below_flt_range"] = e.below_flt_range;
    return j;
}

Json to_json(const SignBruteforceReport &r) {
    Json j;
    j["bound"] = r.bound;
    j["exponents"] = r.exponents;
    Json cases = Json::array();
    for (const auto &c : r.cases) {
        cases.push_back(Json{{"case", c.sign_case.str()},
                             {"verdict", std::string(verdict_name(c.verdict.verdict))},
                             {"reason", std::string(c.verdict.reason)},
                             {"evaluated", c.evaluated},
                             {"equalities", c.equalities}});
    }
    j["cases"] = cases;
    j["evaluated"] = r.evaluated;
    Json sols = Json::array();
    for (const auto &s : r.solutions) {
        sols.push_back(Json{{"z", s.z}, {"x", s.x}, {"y", s.y}, {"n", s.n}});
    }
    j["solutions"] = sols;
    j["consistent"] = r.consistent;
    return j;
}

Json to_json(const RadicalVerification &v) {
    Json j;
    j["q"] = v.q;
    j["solving_exponent"] = v.solving_exponent;
    j["exceeds_two"] = v.exceeds_two;
    j["roots"] = Json{{"y", to_json(v.root_y)}, {"x", to_json(v.root_x)}, {"z", to_json(v.root_z)}};
    j["root_order"] = to_json(v.root_order);
    j["inequality_certified"] = v.inequality_certified;
    j["digits_used"] = v.digits_used;
    j["exact_relation"] = v.exact_relation;
    j["powered_residual"] = to_json(v.powered_residual);
    j["powered_consistent"] = v.powered_consistent;
    j["complex_companions"] = v.complex_companions;
    return j;
}

Json to_json(const LadderStep &s) {
    return Json{{"j", s.j}, {"order", to_json(s.order)}, {"exact_equal", s.exact_equal}};
}

} // namespace reversor
