#include "oracles.hpp"

#include <reversor/errors.hpp>
#include <reversor/reversion.hpp>

#include <doctest.h>

#include <functional>
#include <random>

using namespace reversor;

namespace {

Triplet T(unsigned y, unsigned x, unsigned z) { return Triplet::canonical(y, x, z); }

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const DomainError &e) {
        return e.kind();
    }
    FAIL("no DomainError");
    return ErrorKind::no_reversion;
}

} // namespace

TEST_CASE("power sums and k ratios") {
    CHECK(power_sum(Nat(5), Nat(4), 3) == Nat(189));
    CHECK(power_sum(Nat(7), Nat(3), 0) == Nat(2));
    CHECK(power_sum(Nat(9), Nat(8), 5) == Nat(91817));
    CHECK(k_ratio(Nat(3), Nat(2), 1) == Rat(13, 5));
    CHECK(k_ratio(Nat(5), Nat(4), 2) == Rat(189, 41));
    for (unsigned i = 0; i < 10; ++i) {
        CHECK(k_ratio(Nat(7), Nat(7), i) == Rat(7));
    }
}

TEST_CASE("reversion exponent examples") {
    auto r = reversion_exponent(T(4, 5, 6));
    CHECK(r.n == 3);
    CHECK(r.strict_at_n_minus_1);
    r = reversion_exponent(T(8, 9, 10));
    CHECK(r.n == 5);
    CHECK(r.strict_at_n_minus_1);
    r = reversion_exponent(T(3, 4, 5));
    CHECK(r.n == 3);
    CHECK_FALSE(r.strict_at_n_minus_1);
    // 4^2 = 16 < 18 and 4^3 = 64 > 54
    r = reversion_exponent(T(3, 3, 4));
    CHECK(r.n == 3);
    r = reversion_exponent(T(2, 5, 9));
    CHECK(r.n == 1);
    CHECK_FALSE(r.strict_at_n_minus_1);
    CHECK(kind_of([] { reversion_exponent(T(2, 4, 4)); }) == ErrorKind::no_reversion);
    CHECK(kind_of([] { reversion_exponent(T(3, 3, 3)); }) == ErrorKind::no_reversion);
}

TEST_CASE("reversion exponent matches direct iteration and its ceiling") {
    for (unsigned z = 2; z <= 60; ++z) {
        for (unsigned x = 1; x < z; ++x) {
            for (unsigned y = 1; y <= x; ++y) {
                const Triplet t = T(y, x, z);
                const auto r = reversion_exponent(t);
                REQUIRE(r.n == oracle::reversion_exponent(y, x, z));
                REQUIRE(r.n <= reversion_exponent_ceiling(t));
                const bool strict = r.n >= 2 && oracle::power(z, r.n - 1) < oracle::power(x, r.n - 1) +
                                                                              oracle::power(y, r.n - 1);
                REQUIRE(r.strict_at_n_minus_1 == strict);
            }
        }
    }
}

TEST_CASE("analyze golden values") {
    const auto a = analyze(T(4, 5, 6));
    CHECK(a.phi == Rat(41, 36));
    CHECK(a.k_n_minus_1 == Rat(189, 41));
    CHECK(a.lambda_interval.lo == Rat(41, 36));
    CHECK(a.lambda_interval.hi == Rat(82, 63));
    CHECK(a.rho_interval.lo == Rat(189, 41));
    CHECK(a.rho_interval.hi == Rat(216, 41));
    CHECK(a.last_triangle[0] == Nat(16));
    CHECK(a.last_triangle[2] == Nat(36));
    CHECK(a.last_triangle_square_reversed);
    CHECK(a.lambda_interval_nondegenerate);

    const auto b = analyze(T(2, 3, 4));
    CHECK(b.phi == Rat(5, 4));
    CHECK(b.k_n_minus_1 == Rat(13, 5));
    CHECK(b.lambda_interval.hi == Rat(20, 13));
    CHECK_FALSE(b.square_reversal_asserted);

    const auto c = analyze(T(8, 9, 10));
    CHECK(c.phi == Rat(10657, 10000));
    CHECK(c.lambda_interval.hi == Rat(106570, 91817));
}

TEST_CASE("analyze refusals") {
    CHECK(kind_of([] { analyze(T(3, 3, 3)); }) == ErrorKind::no_reversion);
    CHECK(kind_of([] { analyze(T(3, 4, 5)); }) == ErrorKind::boundary_equality);
    CHECK(kind_of([] { analyze(T(2, 7, 9)); }) == ErrorKind::boundary_equality);
    CHECK(kind_of([] { analyze(T(2, 5, 9)); }) == ErrorKind::no_last_triangle);
}

TEST_CASE("overreversion chains") {
    const Triplet t = T(2, 3, 4);
    const auto mid = overreversion(t, Rat(3));
    CHECK(mid.zeta_n == Rat(15));
    CHECK(mid.lambda == Rat(4, 3));
    CHECK(mid.chain == Chain::strict_chain);
    const auto lo = overreversion(t, Rat(13, 5));
    CHECK(lo.zeta_n == Rat(13));
    CHECK(lo.chain == Chain::at_lower_bound);
    const auto hi = overreversion(T(4, 5, 6), Rat(216, 41));
    CHECK(hi.zeta_n == Rat(216));
    CHECK(hi.chain == Chain::at_upper_bound);
    CHECK(kind_of([&] { overreversion(t, Rat(4)); }) == ErrorKind::out_of_interval);
    CHECK(kind_of([&] { overreversion(t, Rat(2)); }) == ErrorKind::out_of_interval);

    CHECK(is_overreversor(t, Rat(4, 3)));
    CHECK_FALSE(is_overreversor(t, Rat(5, 4)));
    CHECK_FALSE(is_overreversor(t, Rat(20, 13)));
    CHECK_FALSE(is_overreversor(t, Rat(2)));
}

TEST_CASE("interval properties over every analyzable triplet with z <= 100") {
    std::mt19937 rng(17);
    std::size_t analyzed = 0;
    for (unsigned z = 3; z <= 100; ++z) {
        for (unsigned x = 1; x < z; ++x) {
            for (unsigned y = 1; y <= x; ++y) {
                const Triplet t = T(y, x, z);
                const auto r = reversion_exponent(t);
                if (r.n < 2 || !r.strict_at_n_minus_1) {
                    continue;
                }
                ++analyzed;
                const auto a = analyze(t);
                const Rat Z(t.z);
                REQUIRE(a.rho_interval.hi > a.rho_interval.lo);
                REQUIRE(a.phi > Rat(1));
                REQUIRE(a.lambda_interval.hi < Z);
                REQUIRE(a.lambda_interval.hi > a.phi);
                // lambda = z / rho maps the rho interval onto the lambda interval
                REQUIRE(Z / a.rho_interval.lo == a.lambda_interval.hi);
                REQUIRE(Z / a.rho_interval.hi == a.lambda_interval.lo);
                // lambda_max z^{n-1} >= p_{n-1} and z^n > p_n
                REQUIRE(a.lambda_interval.hi * Rat(a.z_pow_n_minus_1) >= Rat(a.p_n_minus_1));
                REQUIRE(a.z_pow_n > a.p_n);
                if (y < x) {
                    REQUIRE(Rat(t.y) < a.k_n_minus_1);
                    REQUIRE(a.k_n_minus_1 < Rat(t.x));
                }
                // growth domination up to n + 16
                for (unsigned i = a.n; i <= a.n + 16; ++i) {
                    REQUIRE(oracle::power(z, i) > oracle::power(x, i) + oracle::power(y, i));
                }
                if (z <= 30) {
                    // random interior rho: lambda rho = z and a strict chain
                    const Rat w(long(rng() % 999 + 1), 1000);
                    const Rat rho = a.rho_interval.lo + (a.rho_interval.hi - a.rho_interval.lo) * w;
                    const auto rec = overreversion(a, t.z, rho);
                    REQUIRE(rec.lambda * rec.rho == Z);
                    REQUIRE(rec.chain == Chain::strict_chain);
                    REQUIRE(Rat(a.p_n) < rec.zeta_n);
                    REQUIRE(rec.zeta_n < Rat(a.z_pow_n));
                    REQUIRE(is_overreversor(a, rec.lambda));
                }
            }
        }
    }
    CHECK(analyzed > 30000);
}

TEST_CASE("k ratios increase strictly between y and x") {
    for (unsigned x = 2; x <= 30; ++x) {
        for (unsigned y = 1; y < x; ++y) {
            Rat prev = k_ratio(Nat(x), Nat(y), 0);
            for (unsigned i = 0; i <= 25; ++i) {
                const Rat k = k_ratio(Nat(x), Nat(y), i);
                REQUIRE(Rat(y) < k);
                REQUIRE(k < Rat(x));
                if (i > 0) {
                    REQUIRE(prev < k);
                }
                prev = k;
            }
        }
    }
}
