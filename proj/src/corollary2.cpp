#include <reversor/corollary2.hpp>
#include <reversor/errors.hpp>

#include <algorithm>
#include <stdexcept>

namespace reversor {

RationalTerm RationalTerm::parse(std::string_view text) {
    const auto slash = text.find('/');
    RationalTerm t{Nat::parse(text.substr(0, slash)), Nat(1)};
    if (slash != std::string_view::npos) {
        t.den = Nat::parse(text.substr(slash + 1));
    }
    if (t.num.is_zero() || t.den.is_zero()) {
        throw std::invalid_argument("rational term needs positive numerator and denominator: '" + std::string(text) + "'");
    }
    return t;
}

ScaledEquation scale_rational_triplet(const RationalTerm &z, const RationalTerm &x, const RationalTerm &y, unsigned n) {
    for (const RationalTerm *t : {&z, &x, &y}) {
        if (t->num.is_zero() || t->den.is_zero()) {
            throw std::invalid_argument("scale_rational_triplet: all six integers must be positive");
        }
    }
    if (n == 0) {
        throw std::invalid_argument("scale_rational_triplet: n must be positive");
    }
    ScaledEquation e;
    e.n = n;
    e.z_int = z.num * x.den * y.den;
    e.x_int = x.num * z.den * y.den;
    e.y_int = y.num * z.den * x.den;
    e.lhs = ipow(e.z_int, n);
    e.rhs = ipow(e.x_int, n) + ipow(e.y_int, n);
    e.equal = e.lhs == e.rhs;
    e.below_flt_range = n <= 2;

    Rat zr = z.value();
    Rat xr = x.value();
    Rat yr = y.value();
    e.rational_lhs = Rat(1);
    e.rational_rhs = Rat(0);
    Rat xp(1);
    Rat yp(1);
    for (unsigned i = 0; i < n; ++i) {
        e.rational_lhs *= zr;
        xp *= xr;
        yp *= yr;
    }
    e.rational_rhs = xp + yp;
    const Rat scale(ipow(z.den * x.den * y.den, n));
    e.certificate_ok = e.rational_lhs * scale == Rat(e.lhs) && e.rational_rhs * scale == Rat(e.rhs) &&
                       (e.rational_lhs == e.rational_rhs) == e.equal;
    return e;
}

std::string SignCase::str() const {
    const auto c = [](Sign s) { return s == Sign::plus ? '+' : '-'; };
    std::string out = "(";
    out += c(z);
    out += ',';
    out += c(x);
    out += ',';
    out += c(y);
    out += parity == Parity::even ? ") even" : ") odd";
    return out;
}

std::string_view verdict_name(Verdict v) noexcept {
    return v == Verdict::impossible ? "Impossible" : "ReducesToFLT";
}

SignVerdict sign_case_verdict(const SignCase &c) {
    using S = Sign;
    if (c.parity == Parity::even) {
        return {Verdict::reduces_to_flt, "even exponent removes every sign: the all-positive equation"};
    }
    const int negatives = (c.z == S::minus) + (c.x == S::minus) + (c.y == S::minus);
    if (negatives == 0) {
        return {Verdict::reduces_to_flt, "the all-positive equation"};
    }
    if (negatives == 3) {
        return {Verdict::reduces_to_flt, "negating both sides gives the all-positive equation"};
    }
    if (c.z == S::minus && c.x == S::minus) {
        return {Verdict::impossible, "-x^n + y^n is negative with modulus below z^n"};
    }
    if (c.z == S::minus && c.y == S::minus) {
        return {Verdict::impossible, "left side negative, x^n - y^n positive"};
    }
    if (c.x == S::minus && c.y == S::minus) {
        return {Verdict::impossible, "left side positive, right side negative"};
    }
    if (c.z == S::minus) {
        return {Verdict::impossible, "left side negative, right side positive"};
    }
    if (c.x == S::minus) {
        return {Verdict::impossible, "left side positive, y^n - x^n negative"};
    }
    return {Verdict::impossible, "x^n - y^n < x^n < z^n"};
}

std::vector<SignCase> all_sign_cases() {
    std::vector<SignCase> out;
    for (Parity p : {Parity::even, Parity::odd}) {
        for (int mask = 0; mask < 8; ++mask) {
            out.push_back({(mask & 4) ? Sign::minus : Sign::plus, (mask & 2) ? Sign::minus : Sign::plus,
                           (mask & 1) ? Sign::minus : Sign::plus, p});
        }
    }
    return out;
}

SignBruteforceReport sign_case_bruteforce(unsigned bound, std::span<const unsigned> exponents,
                                          std::optional<std::array<Sign, 3>> only_signs) {
    if (bound < 3) {
        throw std::invalid_argument("sign_case_bruteforce: bound must be at least 3");
    }
    SignBruteforceReport report;
    report.bound = bound;
    report.exponents.assign(exponents.begin(), exponents.end());
    for (const SignCase &c : all_sign_cases()) {
        report.cases.push_back({c, sign_case_verdict(c), 0, 0});
    }

    for (unsigned n : exponents) {
        if (n == 0) {
            throw std::invalid_argument("sign_case_bruteforce: exponents must be positive");
        }
        std::vector<mpz_class> powers(bound + 1);
        for (unsigned v = 0; v <= bound; ++v) {
            mpz_ui_pow_ui(powers[v].get_mpz_t(), v, n);
        }
        const Parity parity = n % 2 == 0 ? Parity::even : Parity::odd;
        for (std::size_t ci = 0; ci < report.cases.size(); ++ci) {
            SignCaseTally &tally = report.cases[ci];
            const SignCase &c = tally.sign_case;
            if (c.parity != parity) {
                continue;
            }
            if (only_signs && (c.z != (*only_signs)[0] || c.x != (*only_signs)[1] || c.y != (*only_signs)[2])) {
                continue;
            }
            // (s a)^n = s^n a^n, and s^n = s for odd n
            const bool odd = parity == Parity::odd;
            const int sz = odd && c.z == Sign::minus ? -1 : 1;
            const int sx = odd && c.x == Sign::minus ? -1 : 1;
            const int sy = odd && c.y == Sign::minus ? -1 : 1;
            mpz_class lhs;
            mpz_class rhs;
            for (unsigned z = 3; z <= bound; ++z) {
                lhs = sz < 0 ? mpz_class(-powers[z]) : powers[z];
                for (unsigned x = 2; x < z; ++x) {
                    for (unsigned y = 1; y < x; ++y) {
                        rhs = sx < 0 ? mpz_class(-powers[x]) : powers[x];
                        if (sy < 0) {
                            rhs -= powers[y];
                        } else {
                            rhs += powers[y];
                        }
                        ++tally.evaluated;
                        if (lhs == rhs) {
                            ++tally.equalities;
                            report.solutions.push_back({long(z) * (c.z == Sign::minus ? -1 : 1),
                                                        long(x) * (c.x == Sign::minus ? -1 : 1),
                                                        long(y) * (c.y == Sign::minus ? -1 : 1), n});
                        }
                    }
                }
            }
        }
    }
    report.consistent = true;
    for (const SignCaseTally &t : report.cases) {
        report.evaluated += t.evaluated;
        report.consistent = report.consistent && t.equalities == 0;
    }
    return report;
}

namespace {

bool relation_holds(const Triplet &b, BaseRelation rel) {
    if (rel == BaseRelation::sum) {
        return b.z == b.x + b.y;
    }
    return b.z * b.z == b.x * b.x + b.y * b.y;
}

HiReal root_of(const Nat &v, unsigned q, int digits) { return rootn(HiReal::from_nat(v, digits), q); }

} // namespace

RadicalVerification radical_verify(const RadicalTriplet &rt, int digits) {
    if (rt.q == 0) {
        throw std::invalid_argument("radical_verify: q must be positive");
    }
    if (!relation_holds(rt.base, rt.relation)) {
        throw DomainError(ErrorKind::malformed_base,
                          rt.base.str() + (rt.relation == BaseRelation::sum ? " is not z = x + y"
                                                                            : " is not z^2 = x^2 + y^2"));
    }
    const Triplet &b = rt.base;
    RadicalVerification v;
    v.q = rt.q;
    v.solving_exponent = rt.solving_exponent();
    v.exceeds_two = v.solving_exponent > 2;
    v.complex_companions = rt.q - 1;

    const auto margin = [&](int d) { return root_of(b.x, rt.q, d) + root_of(b.y, rt.q, d) - root_of(b.z, rt.q, d); };
    if (rt.q > 1) {
        const EscalatedDecision dec = decide_escalating(margin, Rat(0), digits);
        v.root_order = flip(dec.decision);
        v.digits_used = dec.digits;
    } else {
        v.root_order = rt.relation == BaseRelation::sum ? Certified::indeterminate : flip(margin(digits).sign());
        v.digits_used = digits;
    }
    v.inequality_certified = rt.q > 1 && v.root_order == Certified::less;

    v.root_y = root_of(b.y, rt.q, v.digits_used);
    v.root_x = root_of(b.x, rt.q, v.digits_used);
    v.root_z = root_of(b.z, rt.q, v.digits_used);

    // (c^{1/q})^{solving exponent} is c for a sum base and c^2 for a Pythagorean one.
    const unsigned reduced = v.solving_exponent / rt.q;
    v.exact_relation = ipow(b.z, reduced) == ipow(b.x, reduced) + ipow(b.y, reduced);
    const HiReal powered = pow(v.root_z, v.solving_exponent) - pow(v.root_x, v.solving_exponent) -
                           pow(v.root_y, v.solving_exponent);
    v.powered_residual = abs(powered);
    v.powered_consistent = powered.sign() == Certified::indeterminate;
    return v;
}

std::vector<LadderStep> radical_exponent_ladder(const Triplet &base, unsigned q, int digits) {
    if (!relation_holds(base, BaseRelation::sum)) {
        throw DomainError(ErrorKind::malformed_base, base.str() + " is not z = x + y");
    }
    if (q == 0) {
        throw std::invalid_argument("radical_exponent_ladder: q must be positive");
    }
    std::vector<LadderStep> steps;
    for (unsigned j = 1; j <= q; ++j) {
        LadderStep s;
        s.j = j;
        if (j == q) {
            s.exact_equal = true; // z = x + y
            s.order = Certified::indeterminate;
        } else {
            // c^{j/q} = (c^{1/q})^j
            const auto margin = [&](int d) {
                return pow(root_of(base.x, q, d), j) + pow(root_of(base.y, q, d), j) - pow(root_of(base.z, q, d), j);
            };
            s.order = flip(decide_escalating(margin, Rat(0), digits).decision);
        }
        steps.push_back(s);
    }
    return steps;
}

} // namespace reversor
