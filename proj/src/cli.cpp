#include <reversor/cli.hpp>
#include <reversor/errors.hpp>
#include <reversor/json_io.hpp>
#include <reversor/scan.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace reversor::cli {

namespace {

struct Globals {
    bool json = false;
    int digits = default_digits();
};

Triplet parse_triplet(const std::vector<std::string> &args) {
    if (args.size() != 3) {
        throw std::invalid_argument("expected three integers Y X Z");
    }
    return Triplet::canonical(Nat::parse(args[0]), Nat::parse(args[1]), Nat::parse(args[2]));
}

Rat parse_positive_rat(const std::string &text, const char *what) {
    const Rat r = Rat::parse(text);
    if (r.sign() <= 0) {
        throw std::invalid_argument(std::string(what) + " must be positive");
    }
    return r;
}

bool is_decimal(const Json &j) {
    return j.is_object() && j.size() == 3 && j.contains("value") && j.contains("digits") && j.contains("error_bound");
}

void render_text(const Json &j, const std::string &prefix, std::ostream &os) {
    if (is_decimal(j)) {
        os << prefix << ": " << j["value"].get<std::string>() << "  (+/- " << j["error_bound"].get<std::string>()
           << ", " << j["digits"].get<int>() << " digits)\n";
    } else if (j.is_object()) {
        for (const auto &[key, value] : j.items()) {
            render_text(value, prefix.empty() ? key : prefix + "." + key, os);
        }
    } else if (j.is_array() && std::none_of(j.begin(), j.end(), [](const Json &e) { return e.is_structured(); })) {
        os << prefix << ":";
        for (const auto &e : j) {
            os << ' ' << (e.is_string() ? e.get<std::string>() : e.dump());
        }
        os << '\n';
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
        }
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

std::string emit(const Globals &g, const Json &j) {
    if (g.json) {
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    render_text(j, "", os);
    return os.str();
}

Json triplet_header(const Triplet &t) {
    Json j;
    j["triplet"] = to_json(t);
    return j;
}

// ---------------------------------------------------------------------------

std::string cmd_classify(const Globals &g, const Triplet &t) {
    Json j = triplet_header(t);
    j.update(to_json(classify(t)));
    return emit(g, j);
}

std::string cmd_analyze(const Globals &g, const Triplet &t) {
    const ReversionAnalysis a = analyze(t);
    Json j = triplet_header(t);
    j["class"] = std::string(tag_name(classify(t).tag));
    j.update(to_json(a));
    j["phi_decimal"] = to_json(HiReal::from_rat(a.phi, g.digits));
    j["lambda_max_decimal"] = to_json(HiReal::from_rat(a.lambda_interval.hi, g.digits));
    return emit(g, j);
}

std::string cmd_bounds(const Globals &g, const Triplet &t) { return emit(g, to_json(gap_report(t, g.digits))); }

std::string cmd_solve(const Globals &g, const Triplet &t, double tol) {
    Json j = triplet_header(t);
    j.update(to_json(solve_s(t, tol, g.digits)));
    return emit(g, j);
}

std::string cmd_overrevert(const Globals &g, const Triplet &t, const std::string &rho, const std::string &lambda) {
    const ReversionAnalysis a = analyze(t);
    Json j = triplet_header(t);
    j["n"] = a.n;
    j["rho_interval"] = Json::array({to_json(a.rho_interval.lo), to_json(a.rho_interval.hi)});
    j["lambda_interval"] = Json::array({to_json(a.lambda_interval.lo), to_json(a.lambda_interval.hi)});
    if (!rho.empty()) {
        const OverreversionRecord r = overreversion(a, t.z, parse_positive_rat(rho, "--rho"));
        j.update(to_json(r));
        j["z_pow_n"] = to_json(a.z_pow_n);
        j["p_n"] = to_json(a.p_n);
        j["overreversor"] = is_overreversor(a, r.lambda);
    }
    if (!lambda.empty()) {
        const Rat l = parse_positive_rat(lambda, "--lambda");
        j["lambda"] = to_json(l);
        j["overreversor"] = is_overreversor(a, l);
    }
    return emit(g, j);
}

std::string cmd_radical(const Globals &g, const Triplet &t, unsigned q, const std::string &relation) {
    if (q == 0) {
        throw std::invalid_argument("--q must be positive");
    }
    RadicalTriplet rt{t, q, BaseRelation::sum};
    if (relation == "pythagorean") {
        rt.relation = BaseRelation::pythagorean;
    } else if (relation != "sum") {
        throw std::invalid_argument("--relation must be sum or pythagorean");
    }
    Json j = triplet_header(t);
    j["relation"] = relation;
    j.update(to_json(radical_verify(rt, g.digits)));
    if (rt.relation == BaseRelation::sum) {
        Json ladder = Json::array();
        for (const auto &step : radical_exponent_ladder(t, q, g.digits)) {
            ladder.push_back(to_json(step));
        }
        j["ladder"] = ladder;
    }
    return emit(g, j);
}

std::array<Sign, 3> parse_signs(const std::string &text) {
    if (text.size() != 3) {
        throw std::invalid_argument("--signs takes three of + and -, in z x y order");
    }
    std::array<Sign, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (text[i] != '+' && text[i] != '-') {
            throw std::invalid_argument("--signs takes three of + and -, in z x y order");
        }
        out[i] = text[i] == '+' ? Sign::plus : Sign::minus;
    }
    return out;
}

CommandResult cmd_signs(const Globals &g, unsigned bound, const std::vector<unsigned> &exponents,
                        const std::string &signs) {
    if (exponents.empty()) {
        throw std::invalid_argument("--n needs at least one exponent");
    }
    std::optional<std::array<Sign, 3>> only;
    if (!signs.empty()) {
        only = parse_signs(signs);
    }
    const SignBruteforceReport r = sign_case_bruteforce(bound, exponents, only);
    return {r.consistent ? kOk : kViolation, emit(g, to_json(r)), {}};
}

std::string cmd_witness(const Globals &g, const Triplet &t, unsigned max_n) {
    return emit(g, to_json(no_reversion_witness(t, max_n, g.digits)));
}

std::string cmd_scale(const Globals &g, const std::vector<std::string> &terms, unsigned n) {
    if (terms.size() != 3) {
        throw std::invalid_argument("expected three rationals Z X Y");
    }
    const auto z = RationalTerm::parse(terms[0]);
    const auto x = RationalTerm::parse(terms[1]);
    const auto y = RationalTerm::parse(terms[2]);
    return emit(g, to_json(scale_rational_triplet(z, x, y, n)));
}

std::string order_chain(const EqualizerResult &r) {
    const auto rel = [](bool eq) { return eq ? " = " : " < "; };
    return "n-1" + std::string(rel(r.order.n1_eq_a)) + "a" + rel(r.order.a_eq_s) + "s" + rel(r.order.s_eq_b) + "b" +
           rel(r.order.b_eq_n) + "n";
}

std::string cmd_fig1(const Globals &g, const Triplet &t, const std::string &data_path, unsigned width) {
    const EqualizerResult r = solve_s(t, 1e-12, g.digits);
    const long n = r.n;
    struct Marker {
        const char *label;
        std::string exact;
        HiReal value;
    };
    const std::vector<Marker> markers = {
        {"n-1", std::to_string(n - 1), HiReal::from_long(n - 1, g.digits)},
        {"a", "", r.a},
        {"s", "", r.s},
        {"b", "", r.b},
        {"n", std::to_string(n), HiReal::from_long(n, g.digits)},
    };

    if (!data_path.empty()) {
        std::ofstream data(data_path);
        if (!data) {
            throw std::runtime_error("cannot write " + data_path);
        }
        data << "# label value\n";
        for (const auto &m : markers) {
            data << m.label << ' ' << m.value.decimal(20) << '\n';
        }
    }

    const std::string chain = order_chain(r);
    if (g.json) {
        Json j = triplet_header(t);
        j["n"] = r.n;
        Json pts = Json::array();
        for (const auto &m : markers) {
            pts.push_back(Json{{"label", m.label}, {"value", to_json(m.value)}});
        }
        j["markers"] = pts;
        j["order"] = chain;
        j["ordering_ok"] = r.ordering_ok;
        return emit(g, j);
    }

    // n-1 |-----a------s---b---| n
    std::string line(width + 1, '-');
    std::string labels(width + 1, ' ');
    line.front() = '|';
    line.back() = '|';
    for (std::size_t i = 1; i + 1 < markers.size(); ++i) {
        const double frac = std::clamp(markers[i].value.to_double() - double(n - 1), 0.0, 1.0);
        const auto col = static_cast<std::size_t>(std::lround(frac * width));
        line[col] = '+';
        labels[col] = labels[col] == ' ' ? markers[i].label[0] : '*';
    }
    const std::string left = std::to_string(n - 1) + " ";
    const std::string pad(left.size(), ' ');
    std::ostringstream os;
    os << t.str() << "  n = " << n << "\n\n"
       << left << line << ' ' << n << '\n'
       << pad << labels << "\n\n";
    for (const auto &m : markers) {
        os << "  " << m.label << std::string(5 - std::strlen(m.label), ' ')
           << (m.exact.empty() ? m.value.decimal(20) : m.exact) << '\n';
    }
    os << "\n  " << chain << (r.ordering_ok ? "" : "  (ordering NOT certified)") << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------

struct ScanArgs {
    unsigned z_max = 20;
    unsigned n_max = 6;
    unsigned chunk = 8;
    unsigned workers = 1;
    std::vector<std::string> classes;
    std::vector<std::string> checks;
    double tol = 1e-12;
    std::string csv;
    std::string report;
    std::string state;
    std::string resume;
    std::uint64_t stop_after = 0;
    bool explicit_config = false;
};

std::string scan_summary(const ScanReport &r) {
    std::ostringstream os;
    os << (r.mode == ScanMode::equalities ? "scan" : "sweep") << ": z <= " << r.config.z_max;
    if (r.mode == ScanMode::equalities) {
        os << ", n <= " << r.config.n_max;
    }
    os << '\n' << "triplets checked: " << r.triplets_checked << '\n';
    if (!r.complete) {
        os << "INCOMPLETE: " << (r.chunks_restored + r.chunks_computed) << " of " << r.chunks_total
           << " chunks done\n";
    }
    if (r.mode == ScanMode::equalities) {
        os << "equalities: " << r.equalities.size() << '\n';
        for (const auto &e : r.equalities) {
            os << "  " << e.z << '^' << e.n << " = " << e.x << '^' << e.n << " + " << e.y << '^' << e.n << '\n';
        }
    }
    for (const auto &[k, v] : r.outcomes) {
        os << k << ": " << v << '\n';
    }
    os << "gap histogram (b - a, bins of 1/20):";
    for (auto c : r.gap_histogram) {
        os << ' ' << c;
    }
    os << '\n' << "violations: " << r.violations.size() << '\n';
    for (const auto &v : r.violations) {
        os << "  {" << v.y << ',' << v.x << ',' << v.z << "} " << v.invariant << ": " << v.details << '\n';
    }
    os << "chunks: " << r.chunks_computed << " computed, " << r.chunks_restored << " restored\n";
    os << "elapsed: " << r.elapsed.count() << " s\n";
    return os.str();
}

CommandResult cmd_scan(const Globals &g, const ScanArgs &a, ScanMode mode, const std::atomic<bool> *cancel) {
    ScanConfig cfg;
    cfg.z_max = a.z_max;
    cfg.n_max = a.n_max;
    cfg.chunk_size = a.chunk;
    cfg.digits = g.digits;
    cfg.solver_tolerance = a.tol;
    cfg.emit_rows = !a.csv.empty();
    if (!a.classes.empty()) {
        std::vector<TripletTag> tags;
        for (const auto &c : a.classes) {
            const auto tag = parse_tag(c);
            if (!tag) {
                throw std::invalid_argument("unknown class " + c);
            }
            tags.push_back(*tag);
        }
        cfg.class_filter = tags;
    }
    for (const auto &c : a.checks) {
        const auto check = parse_check(c);
        if (!check) {
            throw std::invalid_argument("unknown check " + c);
        }
        cfg.checks.push_back(*check);
    }
    cfg.validate();

    RunOptions opts;
    opts.workers = std::max(1u, a.workers);
    opts.cancel = cancel;
    if (a.stop_after > 0) {
        opts.stop_after_chunks = a.stop_after;
    }
    ScanReport report;
    if (!a.resume.empty()) {
        report = resume(a.resume, opts, a.explicit_config ? std::optional<ScanConfig>(cfg) : std::nullopt, mode);
    } else {
        if (!a.state.empty()) {
            opts.state_path = a.state;
        }
        report = mode == ScanMode::equalities ? scan_equalities(cfg, opts) : sweep_properties(cfg, opts);
    }

    if (!a.csv.empty()) {
        std::ofstream csv(a.csv);
        if (!csv) {
            throw std::runtime_error("cannot write " + a.csv);
        }
        write_csv(csv, report);
    }
    const std::string canonical = report_json(report);
    if (!a.report.empty()) {
        std::ofstream out(a.report, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write " + a.report);
        }
        out << canonical;
    }
    CommandResult result;
    result.out = g.json ? canonical : scan_summary(report);
    result.exit_code = report.violations.empty() ? kOk : kViolation;
    if (!report.complete) {
        result.err = "scan interrupted; continue with --resume <state file>\n";
    }
    return result;
}

} // namespace

CommandResult run(const std::vector<std::string> &args, const std::atomic<bool> *cancel) {
    CLI::App app{"Reversion exponents, logarithmic bounds and exhaustive power-sum scans", "reversor"};
    app.require_subcommand(1);
    Globals g;
    int precision = 0;
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_option("--precision", precision, "Working precision in significant digits")
        ->check(CLI::Range(50, max_digits()));

    std::vector<std::string> triplet_args;
    const auto with_triplet = [&](CLI::App *sub) {
        sub->add_option("triplet", triplet_args, "Y X Z in any order")->expected(3)->required();
        sub->fallthrough();
        return sub;
    };

    auto *classify_cmd = with_triplet(app.add_subcommand("classify", "Classification of a triplet"));
    auto *analyze_cmd = with_triplet(app.add_subcommand("analyze", "Reversion exponent, reversor and intervals"));
    auto *bounds_cmd = with_triplet(app.add_subcommand("bounds", "Logarithmic bounds a, b and the gap b - a"));
    auto *solve_cmd = with_triplet(app.add_subcommand("solve-s", "Equalizing exponent s with z^s = x^s + y^s"));
    double tol = 1e-12;
    solve_cmd->add_option("--tol", tol, "Bisection tolerance")->check(CLI::PositiveNumber);

    auto *over_cmd = with_triplet(app.add_subcommand("overrevert", "Overreversion for a given rho or lambda"));
    std::string rho;
    std::string lambda;
    over_cmd->add_option("--rho", rho, "Rational P/Q in the rho interval");
    over_cmd->add_option("--lambda", lambda, "Rational P/Q to test as an overreversor");

    auto *radical_cmd = with_triplet(app.add_subcommand("radical", "Radical triplet built from an integer base"));
    unsigned q = 0;
    std::string relation = "sum";
    radical_cmd->add_option("--q", q, "Root index")->required();
    radical_cmd->add_option("--relation", relation, "Base relation: sum or pythagorean");

    auto *witness_cmd = with_triplet(app.add_subcommand("witness", "b(n) > n for triplets with z = x"));
    unsigned max_n = 16;
    witness_cmd->add_option("--max-n", max_n, "Largest exponent")->check(CLI::Range(1, 100000));

    auto *fig_cmd = with_triplet(app.add_subcommand("fig1", "Number line of n-1, a, s, b, n"));
    std::string data_path;
    unsigned width = 60;
    fig_cmd->add_option("--data", data_path, "Write marker positions to a file");
    fig_cmd->add_option("--width", width, "Line width")->check(CLI::Range(10, 400));

    auto *signs_cmd = app.add_subcommand("signs", "Signed-integer cases by brute force");
    signs_cmd->fallthrough();
    unsigned bound = 0;
    std::vector<unsigned> exponents;
    std::string signs;
    signs_cmd->add_option("--bound", bound, "Largest |z|")->required();
    signs_cmd->add_option("--n", exponents, "Exponents")->required();
    signs_cmd->add_option("--signs", signs, "Only this pattern, e.g. +-+ for (z, x, y)");

    auto *scale_cmd = app.add_subcommand("scale", "Clear denominators of a rational power equation");
    scale_cmd->fallthrough();
    std::vector<std::string> terms;
    unsigned scale_n = 0;
    scale_cmd->add_option("terms", terms, "Z X Y as P/Q")->expected(3)->required();
    scale_cmd->add_option("--n", scale_n, "Exponent")->required()->check(CLI::Range(1, 10000));

    ScanArgs scan_args;
    const auto with_scan = [&](CLI::App *sub) {
        sub->fallthrough();
        sub->add_option("--zmax", scan_args.z_max, "Largest z");
        sub->add_option("--chunk", scan_args.chunk, "z values per chunk")->check(CLI::PositiveNumber);
        sub->add_option("--workers", scan_args.workers, "Worker threads")->check(CLI::Range(1, 1024));
        sub->add_option("--out", scan_args.csv, "CSV file, one row per triplet");
        sub->add_option("--report", scan_args.report, "Write the JSON report to a file");
        sub->add_option("--state", scan_args.state, "Checkpoint file");
        sub->add_option("--resume", scan_args.resume, "Continue from a checkpoint file");
        sub->add_option("--stop-after", scan_args.stop_after, "Stop after this many chunks");
        sub->add_option("--tol", scan_args.tol, "Solver tolerance")->check(CLI::PositiveNumber);
        return sub;
    };
    auto *scan_cmd = with_scan(app.add_subcommand("scan", "Exact search for z^n = x^n + y^n"));
    scan_cmd->add_option("--nmax", scan_args.n_max, "Largest exponent");
    auto *sweep_cmd = with_scan(app.add_subcommand("sweep", "Invariant battery over a range"));
    sweep_cmd->add_option("--class", scan_args.classes, "Only these classes");
    sweep_cmd->add_option("--checks", scan_args.checks, "Only these checks");

    CommandResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        std::ostringstream out;
        std::ostringstream err;
        result.exit_code = app.exit(e, out, err) == 0 ? kOk : kUsage;
        result.out = out.str();
        result.err = err.str();
        return result;
    }
    if (precision > 0) {
        g.digits = precision;
    }

    try {
        const auto triplet = [&] { return parse_triplet(triplet_args); };
        if (*classify_cmd) {
            result.out = cmd_classify(g, triplet());
        } else if (*analyze_cmd) {
            result.out = cmd_analyze(g, triplet());
        } else if (*bounds_cmd) {
            result.out = cmd_bounds(g, triplet());
        } else if (*solve_cmd) {
            result.out = cmd_solve(g, triplet(), tol);
        } else if (*over_cmd) {
            if (rho.empty() && lambda.empty()) {
                throw std::invalid_argument("overrevert needs --rho or --lambda");
            }
            result.out = cmd_overrevert(g, triplet(), rho, lambda);
        } else if (*radical_cmd) {
            result.out = cmd_radical(g, triplet(), q, relation);
        } else if (*witness_cmd) {
            result.out = cmd_witness(g, triplet(), max_n);
        } else if (*fig_cmd) {
            result.out = cmd_fig1(g, triplet(), data_path, width);
        } else if (*signs_cmd) {
            result = cmd_signs(g, bound, exponents, signs);
        } else if (*scale_cmd) {
            result.out = cmd_scale(g, terms, scale_n);
        } else if (*scan_cmd || *sweep_cmd) {
            CLI::App *sub = *scan_cmd ? scan_cmd : sweep_cmd;
            for (const char *name : {"--zmax", "--nmax", "--chunk", "--class", "--checks", "--tol", "--out"}) {
                if (sub->get_option_no_throw(name) && sub->count(name) > 0) {
                    scan_args.explicit_config = true;
                }
            }
            if (app.count("--precision") > 0) {
                scan_args.explicit_config = true;
            }
            result = cmd_scan(g, scan_args, *scan_cmd ? ScanMode::equalities : ScanMode::properties, cancel);
        }
    } catch (const DomainError &e) {
        result.exit_code = kDomain;
        result.out = g.json ? Json{{"error", std::string(error_kind_name(e.kind()))}, {"message", e.what()}}.dump(2) + "\n"
                            : std::string();
        result.err = std::string(error_kind_name(e.kind())) + ": " + e.what() + "\n";
    } catch (const std::domain_error &e) {
        result.exit_code = kDomain;
        result.err = std::string("error: ") + e.what() + "\n";
    } catch (const std::invalid_argument &e) {
        result.exit_code = kUsage;
        result.err = std::string("usage error: ") + e.what() + "\n";
    } catch (const std::exception &e) {
        result.exit_code = kUsage;
        result.err = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

} // namespace reversor::cli
