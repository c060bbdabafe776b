#pragma once

#include <reversor/hireal.hpp>
#include <reversor/nat.hpp>
#include <reversor/rat.hpp>
#include <reversor/triplet.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reversor {

// ---------------------------------------------------------------------------
// Rational candidates

/// q / q' with both integers positive, kept unreduced.
struct RationalTerm {
    Nat num;
    Nat den;

    static RationalTerm parse(std::string_view text);
    Rat value() const { return Rat(num, den); }
};

struct ScaledEquation {
    unsigned n = 0;
    Nat z_int; // z.num * x.den * y.den
    Nat x_int; // x.num * z.den * y.den
    Nat y_int; // y.num * z.den * x.den
    Nat lhs;   // z_int^n
    Nat rhs;   // x_int^n + y_int^n
    Rat rational_lhs;
    Rat rational_rhs;
    bool equal = false;
    /// Integer sides equal the rational sides times (z.den x.den y.den)^n.
    bool certificate_ok = false;
    bool below_flt_range = false; // n <= 2
};

/// Clears the denominators of (z)^n = (x)^n + (y)^n.
ScaledEquation scale_rational_triplet(const RationalTerm &z, const RationalTerm &x, const RationalTerm &y, unsigned n);

// ---------------------------------------------------------------------------
// Signed integers

enum class Sign { plus, minus };
enum class Parity { even, odd };

/// Signs applied to (z, x, y) with |z| > |x| > |y|.
struct SignCase {
    Sign z = Sign::plus;
    Sign x = Sign::plus;
    Sign y = Sign::plus;
    Parity parity = Parity::even;

    std::string str() const; // e.g. "(-,-,+) odd"
    friend bool operator==(const SignCase &, const SignCase &) = default;
};

enum class Verdict { reduces_to_flt, impossible };

std::string_view verdict_name(Verdict v) noexcept;

struct SignVerdict {
    Verdict verdict;
    std::string_view reason;
};

SignVerdict sign_case_verdict(const SignCase &c);

/// All 8 sign patterns times both parities.
std::vector<SignCase> all_sign_cases();

struct SignCaseTally {
    SignCase sign_case;
    SignVerdict verdict;
    std::uint64_t evaluated = 0;
    std::uint64_t equalities = 0;
};

struct SignedSolution {
    long z, x, y;
    unsigned n;
};

struct SignBruteforceReport {
    unsigned bound = 0;
    std::vector<unsigned> exponents;
    std::vector<SignCaseTally> cases; // in all_sign_cases() order
    std::uint64_t evaluated = 0;
    std::vector<SignedSolution> solutions;
    bool consistent = false; // no equality anywhere
};

/// Every 1 <= |y| < |x| < |z| <= bound, all sign patterns (or only
/// `only_signs`), every n in `exponents`.
SignBruteforceReport sign_case_bruteforce(unsigned bound, std::span<const unsigned> exponents,
                                          std::optional<std::array<Sign, 3>> only_signs = std::nullopt);

// ---------------------------------------------------------------------------
// Radical triplets

enum class BaseRelation { sum, pythagorean };

struct RadicalTriplet {
    Triplet base;
    unsigned q = 1;
    BaseRelation relation = BaseRelation::sum;

    /// q for a sum base, 2q for a Pythagorean base.
    unsigned solving_exponent() const { return relation == BaseRelation::sum ? q : 2 * q; }
};

struct RadicalVerification {
    unsigned q = 0;
    unsigned solving_exponent = 0;
    bool exceeds_two = false;
    HiReal root_y;
    HiReal root_x;
    HiReal root_z;
    /// z^{1/q} against x^{1/q} + y^{1/q}
    Certified root_order = Certified::indeterminate;
    bool inequality_certified = false; // q > 1 and root_order == less
    int digits_used = 0;
    bool exact_relation = false;  // base relation after powering, in integers
    HiReal powered_residual;      // |r_z^e - r_x^e - r_y^e|
    bool powered_consistent = false;
    unsigned complex_companions = 0; // non-real q-th roots per component
};

/// Throws DomainError(malformed_base) when the base relation fails.
RadicalVerification radical_verify(const RadicalTriplet &rt, int digits = default_digits());

struct LadderStep {
    unsigned j = 0; // exponent j / q
    Certified order = Certified::indeterminate; // z^{j/q} vs x^{j/q} + y^{j/q}
    bool exact_equal = false;                   // only at j = q
};

/// Sum bases: the relation at exponents 1/q, 2/q, ..., q/q.
std::vector<LadderStep> radical_exponent_ladder(const Triplet &base, unsigned q, int digits = default_digits());

} // namespace reversor
