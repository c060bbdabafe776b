#include <reversor/errors.hpp>
#include <reversor/logbounds.hpp>
#include <reversor/power.hpp>
#include <reversor/reversion.hpp>
#include <reversor/scan.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace reversor {

using nlohmann::json;

std::string_view check_name(Check c) noexcept {
    switch (c) {
    case Check::gap_bounds: return "gap_bounds";
    case Check::gap_identity: return "gap_identity";
    case Check::k_squared_above_z: return "k_squared_above_z";
    case Check::interval_nonempty: return "interval_nonempty";
    case Check::lambda_nondegenerate: return "lambda_nondegenerate";
    case Check::k_monotone: return "k_monotone";
    case Check::squared_last_triangle: return "squared_last_triangle";
    case Check::growth_domination: return "growth_domination";
    case Check::solver_ordering: return "solver_ordering";
    }
    return "?";
}

std::optional<Check> parse_check(std::string_view name) noexcept {
    for (Check c : kAllChecks) {
        if (check_name(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

void ScanConfig::validate() const {
    if (z_max < 3) {
        throw std::invalid_argument("scan: z_max must be at least 3");
    }
    if (n_max < 2) {
        throw std::invalid_argument("scan: n_max must be at least 2");
    }
    if (chunk_size == 0) {
        throw std::invalid_argument("scan: chunk_size must be positive");
    }
    if (!(solver_tolerance > 0.0)) {
        throw std::invalid_argument("scan: solver tolerance must be positive");
    }
}

std::vector<Check> ScanConfig::effective_checks() const {
    std::vector<Check> out = checks.empty() ? std::vector<Check>(std::begin(kAllChecks), std::end(kAllChecks)) : checks;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t triple_count(unsigned z_max) {
    const std::uint64_t n = z_max;
    return n * (n + 1) * (n + 2) / 6;
}

namespace {

std::string_view mode_name(ScanMode m) { return m == ScanMode::equalities ? "scan" : "sweep"; }

ScanMode parse_mode(std::string_view s) {
    if (s == "scan") {
        return ScanMode::equalities;
    }
    if (s == "sweep") {
        return ScanMode::properties;
    }
    throw std::runtime_error("state file: unknown mode '" + std::string(s) + "'");
}

std::vector<TripletTag> normalized_filter(const std::vector<TripletTag> &f) {
    std::vector<TripletTag> out = f;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Shortest of %.15g / %.17g that reads back to the same double.
std::string exact_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    if (std::strtod(buf, nullptr) != v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
    }
    return buf;
}

/// The part of the configuration the report content depends on.
json report_config_json(const ScanConfig &cfg, ScanMode mode) {
    json j;
    j["z_max"] = cfg.z_max;
    if (mode == ScanMode::equalities) {
        j["n_max"] = cfg.n_max;
    }
    if (cfg.class_filter) {
        json tags = json::array();
        for (TripletTag t : normalized_filter(*cfg.class_filter)) {
            tags.push_back(std::string(tag_name(t)));
        }
        j["class_filter"] = tags;
    } else {
        j["class_filter"] = nullptr;
    }
    if (mode == ScanMode::properties) {
        json checks = json::array();
        for (Check c : cfg.effective_checks()) {
            checks.push_back(std::string(check_name(c)));
        }
        j["checks"] = checks;
        j["identity_tolerance"] = "1e" + std::to_string(cfg.identity_tolerance_exp);
    }
    j["digits"] = cfg.digits;
    j["solver_tolerance"] = exact_double(cfg.solver_tolerance);
    j["rows"] = cfg.emit_rows;
    return j;
}

/// Everything a checkpoint depends on.
json state_config_json(const ScanConfig &cfg, ScanMode mode) {
    json j = report_config_json(cfg, mode);
    j["mode"] = std::string(mode_name(mode));
    j["chunk_size"] = cfg.chunk_size;
    return j;
}

ScanConfig config_from_state_json(const json &j, ScanMode &mode) {
    ScanConfig cfg;
    mode = parse_mode(j.at("mode").get<std::string>());
    cfg.z_max = j.at("z_max").get<unsigned>();
    if (j.contains("n_max")) {
        cfg.n_max = j.at("n_max").get<unsigned>();
    }
    if (!j.at("class_filter").is_null()) {
        std::vector<TripletTag> tags;
        for (const auto &t : j.at("class_filter")) {
            const auto tag = parse_tag(t.get<std::string>());
            if (!tag) {
                throw std::runtime_error("state file: unknown class " + t.get<std::string>());
            }
            tags.push_back(*tag);
        }
        cfg.class_filter = tags;
    }
    if (j.contains("checks")) {
        for (const auto &c : j.at("checks")) {
            const auto check = parse_check(c.get<std::string>());
            if (!check) {
                throw std::runtime_error("state file: unknown check " + c.get<std::string>());
            }
            cfg.checks.push_back(*check);
        }
    }
    if (j.contains("identity_tolerance")) {
        cfg.identity_tolerance_exp = std::stoi(j.at("identity_tolerance").get<std::string>().substr(2));
    }
    cfg.digits = j.at("digits").get<int>();
    cfg.solver_tolerance = std::stod(j.at("solver_tolerance").get<std::string>());
    cfg.emit_rows = j.at("rows").get<bool>();
    cfg.chunk_size = j.at("chunk_size").get<unsigned>();
    return cfg;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// ---------------------------------------------------------------------------
// Per-chunk work

struct ChunkResult {
    std::uint64_t id = 0;
    std::uint64_t triplets = 0;
    std::vector<EqualityRecord> equalities;
    std::vector<Violation> violations;
    std::array<std::uint64_t, kGapBins> histogram{};
    std::map<std::string, std::uint64_t> outcomes;
    std::vector<TripletRow> rows;
};

json row_to_json(const TripletRow &r) {
    return json::array({r.y, r.x, r.z, r.tag, r.n, r.strict, r.phi_num, r.phi_den, r.k_num, r.k_den,
                        r.lambda_max_num, r.lambda_max_den, r.a, r.b, r.gap, r.s, r.checks});
}

TripletRow row_from_json(const json &j) {
    TripletRow r;
    r.y = j.at(0).get<unsigned>();
    r.x = j.at(1).get<unsigned>();
    r.z = j.at(2).get<unsigned>();
    std::string *fields[] = {&r.tag, &r.n, &r.phi_num, &r.phi_den, &r.k_num, &r.k_den, &r.lambda_max_num,
                             &r.lambda_max_den, &r.a, &r.b, &r.gap, &r.s, &r.checks};
    r.tag = j.at(3).get<std::string>();
    r.n = j.at(4).get<std::string>();
    r.strict = j.at(5).get<std::string>();
    std::size_t idx = 6;
    for (std::size_t f = 2; f < std::size(fields); ++f) {
        *fields[f] = j.at(idx++).get<std::string>();
    }
    return r;
}

json chunk_to_json(const ChunkResult &c) {
    json j;
    j["id"] = c.id;
    j["triplets"] = c.triplets;
    json eq = json::array();
    for (const auto &e : c.equalities) {
        eq.push_back(json::array({e.y, e.x, e.z, e.n}));
    }
    j["equalities"] = eq;
    json vi = json::array();
    for (const auto &v : c.violations) {
        vi.push_back(json::array({v.y, v.x, v.z, v.invariant, v.details}));
    }
    j["violations"] = vi;
    j["histogram"] = c.histogram;
    j["outcomes"] = c.outcomes;
    json rows = json::array();
    for (const auto &r : c.rows) {
        rows.push_back(row_to_json(r));
    }
    j["rows"] = rows;
    return j;
}

ChunkResult chunk_from_json(const json &j) {
    ChunkResult c;
    c.id = j.at("id").get<std::uint64_t>();
    c.triplets = j.at("triplets").get<std::uint64_t>();
    for (const auto &e : j.at("equalities")) {
        c.equalities.push_back({e.at(0).get<unsigned>(), e.at(1).get<unsigned>(), e.at(2).get<unsigned>(),
                                e.at(3).get<unsigned>()});
    }
    for (const auto &v : j.at("violations")) {
        c.violations.push_back({v.at(0).get<unsigned>(), v.at(1).get<unsigned>(), v.at(2).get<unsigned>(),
                                v.at(3).get<std::string>(), v.at(4).get<std::string>()});
    }
    c.histogram = j.at("histogram").get<std::array<std::uint64_t, kGapBins>>();
    c.outcomes = j.at("outcomes").get<std::map<std::string, std::uint64_t>>();
    for (const auto &r : j.at("rows")) {
        c.rows.push_back(row_from_json(r));
    }
    return c;
}

/// z^n for every base and exponent in range, exact and modulo 2^64.
struct PowerTable {
    unsigned z_max;
    unsigned n_max;
    std::vector<mpz_class> exact;
    std::vector<std::uint64_t> wrapped;

    PowerTable(unsigned zm, unsigned nm)
        : z_max(zm), n_max(nm), exact((zm + 1ull) * (nm + 1ull)), wrapped((zm + 1ull) * (nm + 1ull)) {
        for (unsigned v = 0; v <= z_max; ++v) {
            std::uint64_t w = 1;
            for (unsigned n = 0; n <= n_max; ++n) {
                mpz_ui_pow_ui(exact[index(v, n)].get_mpz_t(), v, n);
                wrapped[index(v, n)] = w;
                w *= v;
            }
        }
    }

    std::size_t index(unsigned v, unsigned n) const { return std::size_t(v) * (n_max + 1) + n; }
    const mpz_class &pow(unsigned v, unsigned n) const { return exact[index(v, n)]; }
    std::uint64_t pow_wrapped(unsigned v, unsigned n) const { return wrapped[index(v, n)]; }
};

/// v^n by repeated multiplication, independent of the table.
mpz_class slow_pow(unsigned v, unsigned n) {
    mpz_class r = 1;
    for (unsigned i = 0; i < n; ++i) {
        r *= v;
    }
    return r;
}

double log_mpz(const mpz_class &v) {
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + double(exp2) * std::log(2.0);
}

/// floor(20 (b - a)) = floor(20 log k / log z), decided exactly near bin edges.
std::size_t gap_bin(const Nat &p_prev, const Nat &p_n, unsigned z) {
    const double scaled = double(kGapBins) * (log_mpz(p_n.mpz()) - log_mpz(p_prev.mpz())) / std::log(double(z));
    const double fl = std::floor(scaled);
    if (scaled - fl > 1e-9 && fl + 1.0 - scaled > 1e-9) {
        return std::size_t(std::clamp(fl, 0.0, double(kGapBins - 1)));
    }
    // z^j p_{n-1}^20 <= p_n^20 < z^{j+1} p_{n-1}^20
    mpz_class big_k;
    mpz_class cur;
    mpz_pow_ui(big_k.get_mpz_t(), p_n.mpz().get_mpz_t(), kGapBins);
    mpz_pow_ui(cur.get_mpz_t(), p_prev.mpz().get_mpz_t(), kGapBins);
    std::size_t j = 0;
    cur *= z;
    while (j + 1 < kGapBins && cur <= big_k) {
        ++j;
        cur *= z;
    }
    return j;
}

std::string bool_str(bool b) { return b ? "1" : "0"; }

class ChunkWorker {
public:
    ChunkWorker(const ScanConfig &cfg, ScanMode mode, const PowerTable *table)
        : cfg_(cfg), mode_(mode), table_(table), checks_(cfg.effective_checks()) {
        if (cfg.class_filter) {
            filter_ = normalized_filter(*cfg.class_filter);
        }
    }

    ChunkResult run(std::uint64_t id) const {
        ChunkResult out;
        out.id = id;
        const unsigned z_lo = unsigned(id * cfg_.chunk_size + 1);
        const unsigned z_hi = unsigned(std::min<std::uint64_t>(cfg_.z_max, (id + 1) * cfg_.chunk_size));
        for (unsigned z = z_lo; z <= z_hi; ++z) {
            for (unsigned x = 1; x <= z; ++x) {
                for (unsigned y = 1; y <= x; ++y) {
                    triplet(y, x, z, out);
                }
            }
        }
        return out;
    }

private:
    bool enabled(Check c) const { return std::binary_search(checks_.begin(), checks_.end(), c); }

    void violate(ChunkResult &out, unsigned y, unsigned x, unsigned z, std::string_view name, std::string details) const {
        out.violations.push_back({y, x, z, std::string(name), std::move(details)});
    }

    void equalities(unsigned y, unsigned x, unsigned z, ChunkResult &out, std::string &flags) const {
        std::string found;
        for (unsigned n = 1; n <= cfg_.n_max; ++n) {
            if (table_->pow_wrapped(z, n) != table_->pow_wrapped(x, n) + table_->pow_wrapped(y, n)) {
                continue;
            }
            if (table_->pow(z, n) != table_->pow(x, n) + table_->pow(y, n)) {
                continue;
            }
            out.equalities.push_back({y, x, z, n});
            found += (found.empty() ? "" : ",") + std::to_string(n);
            if (slow_pow(z, n) != slow_pow(x, n) + slow_pow(y, n)) {
                violate(out, y, x, z, "equality_recheck", "n=" + std::to_string(n));
            }
            if (n >= 3) {
                violate(out, y, x, z, "equality_above_two", "z^n = x^n + y^n at n=" + std::to_string(n));
            }
        }
        flags = "equalities=" + (found.empty() ? std::string("none") : found);
    }

    void triplet(unsigned y, unsigned x, unsigned z, ChunkResult &out) const {
        const Triplet t{Nat(y), Nat(x), Nat(z)};
        const TripletClass cls = classify(t);
        if (filter_ && !std::binary_search(filter_->begin(), filter_->end(), cls.tag)) {
            return;
        }
        ++out.triplets;

        TripletRow row;
        row.y = y;
        row.x = x;
        row.z = z;
        row.tag = std::string(tag_name(cls.tag));
        std::string flags;

        if (mode_ == ScanMode::equalities) {
            equalities(y, x, z, out, flags);
        }

        if (z <= x) {
            ++out.outcomes["no_reversion"];
            finish_row(out, row, flags);
            return;
        }

        const ReversionExponent re = reversion_exponent(t);
        const Nat p_prev = power_sum(t.x, t.y, re.n - 1);
        const Nat p_n = power_sum(t.x, t.y, re.n);
        ++out.histogram[gap_bin(p_prev, p_n, z)];
        row.n = std::to_string(re.n);
        row.strict = bool_str(re.strict_at_n_minus_1);
        const Rat k(p_n, p_prev);
        row.k_num = k.num().get_str();
        row.k_den = k.den().get_str();

        std::optional<ReversionAnalysis> analysis;
        if (re.n == 1) {
            ++out.outcomes["no_last_triangle"];
        } else if (!re.strict_at_n_minus_1) {
            ++out.outcomes["boundary_equality"];
        } else {
            ++out.outcomes["analyzed"];
            analysis = analyze(t);
            row.phi_num = analysis->phi.num().get_str();
            row.phi_den = analysis->phi.den().get_str();
            row.lambda_max_num = analysis->lambda_interval.hi.num().get_str();
            row.lambda_max_den = analysis->lambda_interval.hi.den().get_str();
        }

        std::optional<EqualizerResult> solved;
        if (mode_ == ScanMode::properties) {
            properties(t, cls, re, analysis, p_prev, p_n, out, flags, solved);
        }
        if (cfg_.emit_rows) {
            const HiReal a = log_ratio(p_prev, t.z, cfg_.digits);
            const HiReal b = log_ratio(p_n, t.z, cfg_.digits);
            row.a = a.decimal(20);
            row.b = b.decimal(20);
            row.gap = (b - a).decimal(20);
            if (!solved) {
                solved = solve_s(t, cfg_.solver_tolerance, cfg_.digits);
            }
            row.s = solved->s.decimal(20);
        }
        finish_row(out, row, flags);
    }

    void finish_row(ChunkResult &out, TripletRow &row, std::string &flags) const {
        if (cfg_.emit_rows) {
            row.checks = std::move(flags);
            out.rows.push_back(std::move(row));
        }
    }

    void properties(const Triplet &t, const TripletClass &cls, const ReversionExponent &re,
                    const std::optional<ReversionAnalysis> &analysis, const Nat &p_prev, const Nat &p_n,
                    ChunkResult &out, std::string &flags, std::optional<EqualizerResult> &solved) const {
        const unsigned y = unsigned(t.y.to_ulong());
        const unsigned x = unsigned(t.x.to_ulong());
        const unsigned z = unsigned(t.z.to_ulong());
        const bool acute = cls.tag == TripletTag::acute_scalene;
        const auto record = [&](Check c, std::optional<bool> pass, const std::string &details = {}) {
            flags += (flags.empty() ? "" : ";") + std::string(check_name(c)) + ":" +
                     (!pass ? "skip" : (*pass ? "ok" : "fail"));
            if (pass && !*pass) {
                violate(out, y, x, z, check_name(c), details);
            }
        };

        std::optional<LogBoundsReport> report;
        if (enabled(Check::gap_bounds) || enabled(Check::gap_identity) || enabled(Check::k_squared_above_z)) {
            report = gap_report(t, cfg_.digits);
        }
        if (enabled(Check::gap_bounds)) {
            if (acute) {
                const bool ok = report->gap_in_unit && report->gap_above_half && report->n_minus_b_below_half &&
                                report->numeric_flags_agree;
                record(Check::gap_bounds, ok, "b-a=" + report->gap.decimal(12) + " n-b=" + report->n_minus_b.decimal(12));
            } else {
                record(Check::gap_bounds, std::nullopt);
            }
        }
        if (enabled(Check::gap_identity)) {
            const Rat limit(mpz_class(1), [&] {
                mpz_class p;
                mpz_ui_pow_ui(p.get_mpz_t(), 10, unsigned(-cfg_.identity_tolerance_exp));
                return p;
            }());
            const bool ok = report->gap_identity_holds &&
                            report->gap_identity_residual.compare(limit) != Certified::greater;
            record(Check::gap_identity, ok, "residual=" + report->gap_identity_residual.decimal(6));
        }
        if (enabled(Check::k_squared_above_z)) {
            record(Check::k_squared_above_z, acute ? std::optional<bool>(report->k_squared_above_z) : std::nullopt,
                   "k=" + report->k_n_minus_1.str());
        }
        if (enabled(Check::interval_nonempty)) {
            record(Check::interval_nonempty,
                   analysis ? std::optional<bool>(analysis->rho_interval.hi > analysis->rho_interval.lo) : std::nullopt,
                   analysis ? "rho=[" + analysis->rho_interval.lo.str() + "," + analysis->rho_interval.hi.str() + "]"
                            : std::string());
        }
        if (enabled(Check::lambda_nondegenerate)) {
            record(Check::lambda_nondegenerate, analysis ? std::optional<bool>(analysis->lambda_interval_nondegenerate)
                                                         : std::nullopt);
        }
        if (enabled(Check::k_monotone)) {
            if (t.y < t.x) {
                bool ok = true;
                std::string details;
                Nat p0 = power_sum(t.x, t.y, 0);
                Nat p1 = power_sum(t.x, t.y, 1);
                for (unsigned i = 0; i <= re.n && ok; ++i) {
                    const Nat p2 = power_sum(t.x, t.y, i + 2);
                    const Rat k(p1, p0);
                    if (!(Rat(t.y) < k && k < Rat(t.x))) {
                        ok = false;
                        details = "k_" + std::to_string(i) + "=" + k.str() + " outside (y, x)";
                    } else if (i < re.n && !(p1 * p1 < p0 * p2)) { // k_i < k_{i+1}
                        ok = false;
                        details = "k_" + std::to_string(i) + " >= k_" + std::to_string(i + 1);
                    }
                    p0 = p1;
                    p1 = p2;
                }
                record(Check::k_monotone, ok, details);
            } else {
                record(Check::k_monotone, std::nullopt);
            }
        }
        if (enabled(Check::squared_last_triangle)) {
            const bool applies = analysis && analysis->square_reversal_asserted;
            record(Check::squared_last_triangle,
                   applies ? std::optional<bool>(analysis->last_triangle_square_reversed) : std::nullopt,
                   "n=" + std::to_string(re.n));
        }
        if (enabled(Check::growth_domination)) {
            bool ok = true;
            unsigned bad = 0;
            for (unsigned i = re.n; i <= re.n + 16 && ok; ++i) {
                if (cmp_power_sum(t.z, t.x, t.y, i) <= 0) {
                    ok = false;
                    bad = i;
                }
            }
            record(Check::growth_domination, ok, "not reversed at i=" + std::to_string(bad));
        }
        if (enabled(Check::solver_ordering)) {
            solved = solve_s(t, cfg_.solver_tolerance, cfg_.digits);
            bool ok = solved->ordering_ok && solved->residual_ok;
            if (!solved->boundary_equality) {
                ok = ok && (solved->s - solved->a).sign() == Certified::greater &&
                     (solved->b - solved->s).sign() == Certified::greater;
            }
            record(Check::solver_ordering, ok, "s=" + solved->s.decimal(16));
        }
        (void)p_prev;
        (void)p_n;
    }

    const ScanConfig &cfg_;
    ScanMode mode_;
    const PowerTable *table_;
    std::vector<Check> checks_;
    std::optional<std::vector<TripletTag>> filter_;
};

// ---------------------------------------------------------------------------
// State file

constexpr std::string_view kStateMagic = "reversor-scan-state 1";

struct SavedState {
    ScanConfig cfg;
    ScanMode mode;
    std::uint64_t hash;
    std::map<std::uint64_t, ChunkResult> chunks;
};

SavedState read_state(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open state file " + path.string());
    }
    SavedState s;
    std::string line;
    if (!std::getline(in, line) || line != kStateMagic) {
        throw std::runtime_error("not a scan state file: " + path.string());
    }
    std::string hash_hex;
    std::string config_line;
    while (std::getline(in, line)) {
        if (line.rfind("hash ", 0) == 0) {
            hash_hex = line.substr(5);
        } else if (line.rfind("config ", 0) == 0) {
            config_line = line.substr(7);
        } else if (line.rfind("chunk ", 0) == 0) {
            try {
                ChunkResult c = chunk_from_json(json::parse(line.substr(6)));
                s.chunks.emplace(c.id, std::move(c));
            } catch (const json::exception &) {
                // a torn final line from an interrupted write; the chunk is redone
            }
        }
    }
    if (hash_hex.empty() || config_line.empty()) {
        throw std::runtime_error("state file is missing its header: " + path.string());
    }
    s.cfg = config_from_state_json(json::parse(config_line), s.mode);
    s.hash = std::stoull(hash_hex, nullptr, 16);
    if (s.hash != config_hash(s.cfg, s.mode)) {
        throw std::runtime_error("state file header is inconsistent: " + path.string());
    }
    return s;
}

class StateWriter {
public:
    StateWriter(const std::filesystem::path &path, const ScanConfig &cfg, ScanMode mode, bool fresh) {
        out_.open(path, fresh ? std::ios::trunc : std::ios::app);
        if (!out_) {
            throw std::runtime_error("cannot write state file " + path.string());
        }
        if (fresh) {
            out_ << kStateMagic << '\n'
                 << "hash " << hex64(config_hash(cfg, mode)) << '\n'
                 << "config " << state_config_json(cfg, mode).dump() << '\n';
            out_.flush();
        }
    }

    void append(const ChunkResult &c) {
        std::lock_guard lock(mutex_);
        out_ << "chunk " << chunk_to_json(c).dump() << '\n';
        out_.flush();
    }

private:
    std::ofstream out_;
    std::mutex mutex_;
};

ScanReport run(const ScanConfig &cfg, ScanMode mode, const RunOptions &opts,
               std::map<std::uint64_t, ChunkResult> restored, bool fresh_state) {
    cfg.validate();
    const auto started = std::chrono::steady_clock::now();
    const std::uint64_t total = (cfg.z_max + cfg.chunk_size - 1) / cfg.chunk_size;

    std::optional<StateWriter> writer;
    if (opts.state_path) {
        writer.emplace(*opts.state_path, cfg, mode, fresh_state);
    }

    std::vector<std::uint64_t> pending;
    for (std::uint64_t id = 0; id < total; ++id) {
        if (!restored.count(id)) {
            pending.push_back(id);
        }
    }

    std::optional<PowerTable> table;
    if (mode == ScanMode::equalities && !pending.empty()) {
        table.emplace(cfg.z_max, cfg.n_max);
    }
    const ChunkWorker worker(cfg, mode, table ? &*table : nullptr);

    std::vector<std::optional<ChunkResult>> computed(pending.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> started_chunks{0};
    std::mutex error_mutex;
    std::exception_ptr error;

    const auto loop = [&] {
        for (;;) {
            if (opts.cancel && opts.cancel->load()) {
                return;
            }
            if (opts.stop_after_chunks && started_chunks.fetch_add(1) >= *opts.stop_after_chunks) {
                return;
            }
            const std::size_t slot = next.fetch_add(1);
            if (slot >= pending.size()) {
                return;
            }
            try {
                ChunkResult c = worker.run(pending[slot]);
                if (writer) {
                    writer->append(c);
                }
                computed[slot] = std::move(c);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                return;
            }
        }
    };

    const unsigned workers = std::max(1u, opts.workers);
    if (workers == 1) {
        loop();
    } else {
        std::vector<std::thread> threads;
        for (unsigned i = 0; i < workers; ++i) {
            threads.emplace_back(loop);
        }
        for (auto &th : threads) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    ScanReport report;
    report.mode = mode;
    report.config = cfg;
    report.chunks_total = total;
    report.chunks_restored = restored.size();
    for (std::size_t i = 0; i < pending.size(); ++i) {
        if (computed[i]) {
            ++report.chunks_computed;
            restored.emplace(pending[i], std::move(*computed[i]));
        }
    }
    report.complete = restored.size() == total;
    // ascending chunk order
    for (auto &[id, c] : restored) {
        if (id >= total) {
            continue;
        }
        report.triplets_checked += c.triplets;
        report.equalities.insert(report.equalities.end(), c.equalities.begin(), c.equalities.end());
        report.violations.insert(report.violations.end(), c.violations.begin(), c.violations.end());
        for (std::size_t b = 0; b < kGapBins; ++b) {
            report.gap_histogram[b] += c.histogram[b];
        }
        for (const auto &[k, v] : c.outcomes) {
            report.outcomes[k] += v;
        }
        std::move(c.rows.begin(), c.rows.end(), std::back_inserter(report.rows));
    }
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

} // namespace

std::uint64_t config_hash(const ScanConfig &cfg, ScanMode mode) { return fnv1a(state_config_json(cfg, mode).dump()); }

ScanReport scan_equalities(const ScanConfig &cfg, const RunOptions &opts) {
    return run(cfg, ScanMode::equalities, opts, {}, true);
}

ScanReport sweep_properties(const ScanConfig &cfg, const RunOptions &opts) {
    return run(cfg, ScanMode::properties, opts, {}, true);
}

ScanReport resume(const std::filesystem::path &state_path, RunOptions opts, const std::optional<ScanConfig> &expected,
                  std::optional<ScanMode> expected_mode) {
    SavedState saved = read_state(state_path);
    if (expected_mode && *expected_mode != saved.mode) {
        throw DomainError(ErrorKind::config_mismatch, "state file " + state_path.string() + " belongs to a " +
                                                          std::string(mode_name(saved.mode)) + " run");
    }
    if (expected) {
        const ScanMode mode = expected_mode.value_or(saved.mode);
        if (config_hash(*expected, mode) != saved.hash) {
            throw DomainError(ErrorKind::config_mismatch,
                              "state file " + state_path.string() + " was written for a different configuration");
        }
    }
    opts.state_path = state_path;
    return run(saved.cfg, saved.mode, opts, std::move(saved.chunks), false);
}

std::string report_json(const ScanReport &r) {
    json j;
    j["mode"] = std::string(mode_name(r.mode));
    j["config"] = report_config_json(r.config, r.mode);
    j["complete"] = r.complete;
    j["triplets_checked"] = r.triplets_checked;
    if (!r.config.class_filter) {
        j["triplets_in_range"] = triple_count(r.config.z_max);
    }
    json eq = json::array();
    for (const auto &e : r.equalities) {
        eq.push_back({{"y", e.y}, {"x", e.x}, {"z", e.z}, {"n", e.n}});
    }
    j["equalities"] = eq;
    json vi = json::array();
    for (const auto &v : r.violations) {
        vi.push_back({{"y", v.y}, {"x", v.x}, {"z", v.z}, {"invariant", v.invariant}, {"details", v.details}});
    }
    j["violations"] = vi;
    j["gap_histogram"] = {{"bin_width", "1/20"}, {"counts", r.gap_histogram}};
    j["outcomes"] = r.outcomes;
    return j.dump(2) + "\n";
}

void write_csv(std::ostream &os, const ScanReport &r) {
    os << "y,x,z,class,n,strict_flag,phi_num,phi_den,k_num,k_den,lambda_max_num,lambda_max_den,a,b,gap,s,checks\n";
    for (const auto &row : r.rows) {
        os << row.y << ',' << row.x << ',' << row.z << ',' << row.tag << ',' << row.n << ',' << row.strict << ','
           << row.phi_num << ',' << row.phi_den << ',' << row.k_num << ',' << row.k_den << ',' << row.lambda_max_num
           << ',' << row.lambda_max_den << ',' << row.a << ',' << row.b << ',' << row.gap << ',' << row.s << ','
           << row.checks << '\n';
    }
}

} // namespace reversor
