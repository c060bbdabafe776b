// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include "oracles.hpp"

#include <reversor/corollary2.hpp>
#include <reversor/errors.hpp>
#include <reversor/logbounds.hpp>
#include <reversor/reversion.hpp>
#include <reversor/scan.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace reversor;

namespace {

using Clock = std::chrono::steady_clock;

Triplet T(unsigned y, unsigned x, unsigned z) { return Triplet::canonical(y, x, z); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream notes;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            notes << " [failed: " << what << "]";
        }
    }
};

bool near(const HiReal &v, double expected, double tol) { return std::fabs(v.to_double() - expected) <= tol; }

Outcome golden_examples() {
    Outcome o;
    const auto a456 = analyze(T(4, 5, 6));
    o.require(a456.n == 3, "{4,5,6} n = 3");
    o.require(a456.phi == Rat(41, 36), "{4,5,6} phi = 41/36");
    o.require(a456.k_n_minus_1 == Rat(189, 41), "{4,5,6} k2 = 189/41");
    o.require(a456.lambda_interval.hi == Rat(82, 63), "{4,5,6} lambda_max = 82/63");
    o.require(near(HiReal::from_rat(a456.lambda_interval.hi, 64), 1.3015, 1e-4), "{4,5,6} lambda_max ~ 1.3015");
    o.require(near(HiReal::from_rat(a456.phi, 64), 1.1388, 1e-4), "{4,5,6} phi ~ 1.1388");

    const auto a8910 = analyze(T(8, 9, 10));
    o.require(a8910.n == 5, "{8,9,10} n = 5");
    o.require(a8910.p_n_minus_1 == Nat(10657), "{8,9,10} p4 = 10657");
    o.require(a8910.k_n_minus_1 == Rat(91817, 10657), "{8,9,10} k4 = 91817/10657");
    o.require(near(HiReal::from_rat(a8910.lambda_interval.hi, 64), 1.160678, 1e-4), "{8,9,10} lambda_max ~ 1.160678");
    o.require(a8910.phi == Rat(10657, 10000), "{8,9,10} phi = 10657/10000");

    const auto a234 = analyze(T(2, 3, 4));
    o.require(a234.phi == Rat(5, 4), "{2,3,4} phi = 5/4");
    o.require(a234.k_n_minus_1 == Rat(13, 5), "{2,3,4} k1 = 13/5");
    o.require(a234.lambda_interval.hi == Rat(20, 13), "{2,3,4} lambda_max = 20/13");
    const auto chain = overreversion(a234, Nat(4), Rat(3));
    o.require(chain.zeta_n == Rat(15) && a234.z_pow_n == Nat(16) && a234.p_n == Nat(13) &&
                  chain.chain == Chain::strict_chain,
              "{2,3,4} rho = 3 gives 16 > 15 > 13");
    o.require(chain.lambda == Rat(4, 3) && is_overreversor(a234, chain.lambda), "{2,3,4} lambda = 4/3 overreversor");
    o.notes << " {4,5,6}, {8,9,10}, {2,3,4} exact";
    return o;
}

Outcome log_bound_examples() {
    Outcome o;
    struct Row {
        unsigned y, x, z;
        double b, a, gap;
        bool a_exact;
    };
    const Row rows[] = {
        {2, 5, 9, 0.885, 0.315, 0.570, false}, {2, 7, 9, 1.806, 1.0, 0.806, true},
        {4, 5, 7, 1.908, 1.129, 0.779, false}, {3, 4, 5, 2.802, 2.0, 0.802, true},
        {4, 5, 6, 2.925, 2.072, 0.852, false}, {6, 7, 8, 3.950, 3.042, 0.908, false},
    };
    double worst = 0.0;
    for (const auto &r : rows) {
        const auto rep = gap_report(T(r.y, r.x, r.z));
        const std::string name = rep.triplet.str();
        for (const auto &[got, want] : {std::pair{rep.b.value.to_double(), r.b}, std::pair{rep.a.value.to_double(), r.a},
                                        std::pair{rep.gap.to_double(), r.gap}}) {
            worst = std::max(worst, std::fabs(got - want));
            o.require(std::fabs(got - want) <= 1e-3, name + " value within 1e-3");
        }
        if (r.a_exact) {
            o.require(rep.a.exact.has_value(), name + " a flagged exact");
        }
    }
    o.notes << " 6 examples, max deviation " << worst;
    return o;
}

Outcome degenerate_witnesses() {
    Outcome o;
    const auto w244 = no_reversion_witness(T(2, 4, 4), 16, 64);
    o.require(w244.all_exceed && w244.rows.size() == 16, "{2,4,4} b(n) > n for n <= 16");
    const auto w333 = no_reversion_witness(T(3, 3, 3), 16, 64);
    o.require(w333.all_exceed && w333.rows.size() == 16, "{3,3,3} b(n) > n for n <= 16");
    const Rat limit(mpz_class(1), mpz_class("1000000000000000000000000000000")); // 1e-30
    double worst = 0.0;
    for (const auto &row : w333.rows) {
        o.require(row.excess_residual && row.excess_residual->compare(limit) == Certified::less,
                  "{3,3,3} b(n) - n = log2/log3 within 1e-30");
        if (row.excess_residual) {
            worst = std::max(worst, row.excess_residual->to_double());
        }
    }
    o.notes << " max |b(n) - n - log2/log3| = " << worst;
    return o;
}

Outcome property_sweep() {
    Outcome o;
    ScanConfig cfg;
    cfg.z_max = 100;
    cfg.class_filter = std::vector{TripletTag::acute_scalene};
    cfg.checks = {Check::gap_bounds,         Check::gap_identity, Check::k_squared_above_z,    Check::interval_nonempty,
                  Check::lambda_nondegenerate, Check::k_monotone,  Check::squared_last_triangle};
    const auto t0 = Clock::now();
    const ScanReport r = sweep_properties(cfg);
    const double secs = seconds_since(t0);

    std::uint64_t expected = 0;
    for (unsigned z = 1; z <= 100; ++z) {
        for (unsigned x = 1; x <= z; ++x) {
            for (unsigned y = 1; y <= x; ++y) {
                expected += oracle::acute_with_reversion(y, x, z) ? 1 : 0;
            }
        }
    }
    o.require(r.complete, "sweep complete");
    o.require(r.triplets_checked == expected, "every acute triplet visited");
    o.require(r.violations.empty(), "zero violations");
    for (std::size_t bin = 0; bin < kGapBins / 2; ++bin) {
        o.require(r.gap_histogram[bin] == 0, "no gap below 1/2 in histogram");
    }
    o.require(secs < 60.0, "under 60 s single-threaded");
    o.notes << " " << r.triplets_checked << " triplets, " << r.violations.size() << " violations, " << secs << " s";
    return o;
}

Outcome equalizer() {
    Outcome o;
    const auto s345 = solve_s(T(3, 4, 5), 1e-12);
    o.require(s345.boundary_equality, "{3,4,5} boundary flag");
    o.require(s345.s.compare(Rat(2) + Rat(mpz_class(1), mpz_class("1000000000000"))) == Certified::less &&
                  s345.s.compare(Rat(2) - Rat(mpz_class(1), mpz_class("1000000000000"))) == Certified::greater,
              "{3,4,5} s = 2 within 1e-12");

    const auto t0 = Clock::now();
    std::size_t count = 0;
    long double worst = 0.0L;
    for (unsigned z = 2; z <= 60; ++z) {
        for (unsigned x = 1; x < z; ++x) {
            for (unsigned y = 1; y <= x; ++y) {
                if (!oracle::acute_with_reversion(y, x, z)) {
                    continue;
                }
                ++count;
                const Triplet t = T(y, x, z);
                const auto r = solve_s(t, 1e-12);
                const std::string name = t.str();
                o.require(r.ordering_ok, name + " a <= s <= b");
                o.require(r.residual_ok, name + " residual <= 1e-12 log z");
                const unsigned n = oracle::reversion_exponent(y, x, z);
                const long double fp = oracle::fixed_point_s(y, x, z, oracle::log_ratio(y, x, z, n));
                const long double diff = std::fabs((long double)r.s.to_double() - fp);
                worst = std::max(worst, diff);
                o.require(diff <= 1e-10L, name + " fixed-point agreement");
            }
        }
    }
    o.notes << " " << count << " acute triplets, max |s - oracle| = " << (double)worst << ", "
            << seconds_since(t0) << " s";
    return o;
}

Outcome exhaustive_scan() {
    Outcome o;
    ScanConfig cfg;
    cfg.z_max = 60;
    cfg.n_max = 12;
    const auto t0 = Clock::now();
    std::string reference;
    std::size_t n2 = 0;
    for (unsigned workers : {1u, 2u, 8u}) {
        RunOptions opts;
        opts.workers = workers;
        const ScanReport r = scan_equalities(cfg, opts);
        const std::string json = report_json(r);
        if (workers == 1) {
            reference = json;
            o.require(r.triplets_checked == 60ull * 61 * 62 / 6, "all triples visited");
            std::set<oracle::Triple> found;
            for (const auto &e : r.equalities) {
                o.require(e.n <= 2, "no equality with n >= 3");
                o.require(oracle::power(e.z, e.n) == oracle::power(e.x, e.n) + oracle::power(e.y, e.n),
                          "equality re-verified");
                if (e.n == 2) {
                    found.emplace(e.y, e.x, e.z);
                }
            }
            n2 = found.size();
            o.require(found == oracle::pythagorean(60), "n = 2 list matches Euclid generator");
            o.require(r.violations.empty(), "no violations");
        } else {
            o.require(json == reference, "byte-identical with " + std::to_string(workers) + " workers");
        }
    }
    const double secs = seconds_since(t0);
    o.require(secs < 300.0, "under 5 minutes");
    o.notes << " " << n2 << " Pythagorean triples, workers 1/2/8 identical, " << secs << " s";
    return o;
}

Outcome corollary_two() {
    Outcome o;
    const std::vector<unsigned> exps{3, 4, 5};
    const auto b = sign_case_bruteforce(30, exps);
    o.require(b.cases.size() == 16, "16 sign cases");
    o.require(b.solutions.empty() && b.consistent, "zero signed equalities up to 30");
    for (const auto &c : b.cases) {
        o.require(c.equalities == 0, c.sign_case.str() + " has no equality");
    }

    const auto rv = radical_verify({T(2, 3, 5), 3, BaseRelation::sum});
    o.require(rv.inequality_certified && rv.root_order == Certified::less, "5^(1/3) < 2^(1/3) + 3^(1/3)");
    o.require(rv.exact_relation && rv.solving_exponent == 3, "2 + 3 = 5 at exponent 3");

    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<unsigned> small(1, 40);
    std::uniform_int_distribution<unsigned> exp_dist(1, 6);
    std::size_t agreements = 0;
    std::size_t true_cases = 0;
    const auto pyth = oracle::pythagorean(100);
    const std::vector<oracle::Triple> pyth_list(pyth.begin(), pyth.end());
    for (int i = 0; i < 1000; ++i) {
        unsigned n = exp_dist(rng);
        std::array<unsigned, 3> num{small(rng), small(rng), small(rng)}; // z, x, y
        std::array<unsigned, 3> den{small(rng), small(rng), small(rng)};
        if (i % 4 == 0) {
            // a true equation scaled by a common rational, written unreduced
            const unsigned p = small(rng);
            const unsigned q = small(rng);
            if (i % 8 == 0) {
                n = 1;
                const unsigned y = small(rng);
                const unsigned x = small(rng);
                num = {(x + y) * p, x * p, y * p};
            } else {
                n = 2;
                const auto &[y, x, z] = pyth_list[rng() % pyth_list.size()];
                num = {z * p, x * p, y * p};
            }
            for (std::size_t k = 0; k < 3; ++k) {
                const unsigned f = small(rng);
                num[k] *= f;
                den[k] = q * f;
            }
        }
        mpq_class z(num[0], den[0]);
        mpq_class x(num[1], den[1]);
        mpq_class y(num[2], den[2]);
        z.canonicalize();
        x.canonicalize();
        y.canonicalize();
        mpq_class zn = 1;
        mpq_class xn = 1;
        mpq_class yn = 1;
        for (unsigned k = 0; k < n; ++k) {
            zn *= z;
            xn *= x;
            yn *= y;
        }
        const bool truth = zn == xn + yn;
        true_cases += truth ? 1 : 0;
        const auto scaled = scale_rational_triplet({Nat(num[0]), Nat(den[0])}, {Nat(num[1]), Nat(den[1])},
                                                   {Nat(num[2]), Nat(den[2])}, n);
        if (scaled.equal == truth && scaled.certificate_ok) {
            ++agreements;
        }
    }
    o.require(agreements == 1000, "scaling truth value agrees on 1000 random triples");
    o.notes << " 16 cases clean to 30, radical {2,3,5} q=3 certified, scaling " << agreements << "/1000 ("
            << true_cases << " true)";
    return o;
}

} // namespace

int main() {
    const std::pair<const char *, std::function<Outcome()>> criteria[] = {
        {"golden reversion examples", golden_examples},
        {"logarithmic bound examples", log_bound_examples},
        {"degenerate witnesses", degenerate_witnesses},
        {"property sweep z <= 100", property_sweep},
        {"equalizing exponent", equalizer},
        {"exhaustive scan z <= 60, n <= 12", exhaustive_scan},
        {"signed, rational and radical cases", corollary_two},
    };
    int failed = 0;
    int index = 0;
    for (const auto &[name, fn] : criteria) {
        ++index;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception &e) {
            o.pass = false;
            o.notes << " [exception: " << e.what() << "]";
        }
        std::cout << "criterion " << index << " (" << name << "): " << (o.pass ? "PASS" : "FAIL") << " -"
                  << o.notes.str() << std::endl;
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
