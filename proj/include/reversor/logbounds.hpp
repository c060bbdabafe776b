#pragma once

#include <reversor/classify.hpp>
#include <reversor/hireal.hpp>
#include <reversor/rat.hpp>
#include <reversor/triplet.hpp>

#include <compare>
#include <optional>
#include <vector>

namespace reversor {

/// log p / log z as an exact rational when p and z are powers of a common
/// integer, nullopt otherwise. Requires z >= 2, p >= 1.
std::optional<Rat> exact_log_ratio(const Nat &p, const Nat &z);

/// log p / log z at `digits`; exact values are returned with zero error.
HiReal log_ratio(const Nat &p, const Nat &z, int digits);

struct Bound {
    HiReal value;
    std::optional<Rat> exact;
    /// Sign of (bound - exponent), decided with integers.
    std::strong_ordering vs_exponent = std::strong_ordering::equal;
    /// The HiReal comparison with the exponent matches vs_exponent.
    bool numeric_agrees = false;
};

/// b = log(x^n + y^n) / log z. Throws DomainError(degenerate_base) for z = 1.
Bound bound_b(const Triplet &t, unsigned n, int digits = default_digits());

/// a = log(x^{n-1} + y^{n-1}) / log z, n >= 1.
Bound bound_a(const Triplet &t, unsigned n, int digits = default_digits());

struct LogBoundsReport {
    Triplet triplet;
    TripletTag tag;
    unsigned n = 0;
    bool strict_at_n_minus_1 = false;
    Bound a;
    Bound b;
    HiReal gap;       // b - a
    HiReal n_minus_b;
    Rat k_n_minus_1;

    // decided exactly
    bool gap_in_unit = false;          // 0 < b - a < 1
    bool gap_above_half = false;       // b - a > 1/2
    bool n_minus_b_below_half = false; // n - b < 1/2
    bool k_squared_above_z = false;

    /// The half bounds are asserted for AcuteScalene only; elsewhere measured.
    bool half_bounds_asserted = false;
    bool numeric_flags_agree = false;

    HiReal gap_identity_residual; // |(b - a) - log k_{n-1} / log z|
    bool gap_identity_holds = false;

    bool pythagorean = false;
    bool a_is_two = false;
    bool b_is_integer = false;
};

/// Throws DomainError(no_reversion) when z <= x.
LogBoundsReport gap_report(const Triplet &t, int digits = default_digits());

struct EqualizerResult {
    unsigned n = 0;
    HiReal s;
    HiReal lo;
    HiReal hi;
    HiReal a;
    HiReal b;
    HiReal residual; // |s log z - log(x^s + y^s)|
    unsigned iterations = 0;
    int digits = 0;
    /// s equals a bracket end exactly (z^{n-1} = p_{n-1}, or x = y = 1).
    bool boundary_equality = false;

    struct Order {
        bool n1_le_a = false, a_le_s = false, s_le_b = false, b_le_n = false;
        bool n1_eq_a = false, a_eq_s = false, s_eq_b = false, b_eq_n = false;
    } order;
    bool ordering_ok = false;
    bool residual_ok = false; // residual <= tolerance * log z
};

/// Bisection for z^s = x^s + y^s on [a, b]. Throws DomainError with
/// no_reversion (z <= x) or no_sign_change.
EqualizerResult solve_s(const Triplet &t, double tolerance = 1e-12, int digits = default_digits());

struct WitnessRow {
    unsigned n = 0;
    HiReal b;
    bool exceeds_n = false; // z^n < p_n, exact
    bool numeric_agrees = false;
    std::optional<HiReal> excess_residual; // |b - n - log 2 / log z|, z = x = y only
};

struct WitnessReport {
    Triplet triplet;
    bool equilateral = false;
    std::optional<HiReal> log2_over_log_z;
    std::vector<WitnessRow> rows;
    bool all_exceed = false;
};

/// For the never-reversing classes (z = x). Throws DomainError with
/// wrong_class (z > x) or degenerate_base (z = 1).
WitnessReport no_reversion_witness(const Triplet &t, unsigned max_n, int digits = default_digits());

} // namespace reversor
