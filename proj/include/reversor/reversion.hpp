#pragma once

#include <reversor/nat.hpp>
#include <reversor/rat.hpp>
#include <reversor/triplet.hpp>

#include <array>

namespace reversor {

/// p_i = x^i + y^i
Nat power_sum(const Nat &x, const Nat &y, unsigned long i);

/// k_i = p_{i+1} / p_i
Rat k_ratio(const Nat &x, const Nat &y, unsigned long i);

struct ReversionExponent {
    unsigned n = 0;                    // least i >= 1 with z^i > p_i
    bool strict_at_n_minus_1 = false;  // n >= 2 and z^{n-1} < p_{n-1}
};

/// Throws DomainError(no_reversion) when z <= x.
ReversionExponent reversion_exponent(const Triplet &t);

/// A priori ceiling on the reversion exponent: the least m with z^m > 2 x^m.
unsigned reversion_exponent_ceiling(const Triplet &t);

struct RatInterval {
    Rat lo;
    Rat hi;

    bool contains(const Rat &v) const { return lo <= v && v <= hi; }
    bool contains_open(const Rat &v) const { return lo < v && v < hi; }
};

struct ReversionAnalysis {
    unsigned n = 0;
    unsigned n_minus_1 = 0;
    bool strict_at_n_minus_1 = false;
    Nat p_n_minus_1;
    Nat p_n;
    Nat z_pow_n_minus_1;
    Nat z_pow_n;
    Rat k_n_minus_1;
    Rat phi;
    RatInterval rho_interval;    // [k_{n-1}, z^n / p_{n-1}]
    RatInterval lambda_interval; // [phi, z / k_{n-1}]
    std::array<Nat, 3> last_triangle; // (y^{n-1}, x^{n-1}, z^{n-1})
    bool last_triangle_square_reversed = false; // z^{2n-2} > p_{2n-2}
    bool square_reversal_asserted = false;      // only claimed when n > 2
    bool lambda_interval_nondegenerate = false; // z / k_{n-1} > phi
};

/// Needs z > x and a strict last triangle. Throws DomainError with
/// no_reversion (z <= x), no_last_triangle (n = 1) or boundary_equality
/// (z^{n-1} = p_{n-1}).
ReversionAnalysis analyze(const Triplet &t);

enum class Chain { at_lower_bound, strict_chain, at_upper_bound };

struct OverreversionRecord {
    Rat rho;
    Rat lambda; // z / rho
    Rat zeta_n; // rho * p_{n-1}
    Chain chain;
};

/// Throws DomainError(out_of_interval) when rho is outside the rho interval.
OverreversionRecord overreversion(const ReversionAnalysis &analysis, const Nat &z, const Rat &rho);
OverreversionRecord overreversion(const Triplet &t, const Rat &rho);

/// phi < lambda < z / k_{n-1}
bool is_overreversor(const ReversionAnalysis &analysis, const Rat &lambda);
bool is_overreversor(const Triplet &t, const Rat &lambda);

} // namespace reversor
