#pragma once

#include <reversor/nat.hpp>
#include <reversor/rat.hpp>

#include <mpfr.h>

#include <string>
#include <utility>

namespace reversor {

inline constexpr int kDefaultDigits = 64;
inline constexpr int kDefaultMaxDigits = 1024;

/// Working precision in significant decimal digits. REVERSOR_PRECISION overrides
/// the built-in default of 64; values below 50 are raised to 50.
int default_digits();
int max_digits() noexcept;

/// Outcome of comparing an approximation against an exact threshold. A side
/// is reported only when the whole error interval lies on it.
enum class Certified { less, greater, indeterminate };

/// MPFR value plus a rigorous bound on |value - true quantity|.
///
/// Every operation rounds to nearest and adds its own rounding error and the
/// first-order-exact propagation of the operands' bounds; the bound itself is
/// kept with upward rounding so it never understates the error.
class HiReal {
public:
    explicit HiReal(int digits = default_digits());
    HiReal(const HiReal &other);
    HiReal(HiReal &&other) noexcept;
    HiReal &operator=(const HiReal &other);
    HiReal &operator=(HiReal &&other) noexcept;
    ~HiReal();

    static HiReal from_nat(const Nat &value, int digits);
    static HiReal from_rat(const Rat &value, int digits);
    static HiReal from_long(long value, int digits);
    /// The double is taken as an exact point, not as an approximation.
    static HiReal from_double(double value, int digits);

    int digits() const noexcept { return digits_; }
    mpfr_prec_t bits() const noexcept;
    mpfr_srcptr value() const noexcept { return value_; }

    long double error_bound() const;
    /// True when error_bound() <= limit.
    bool error_within(const Rat &limit) const;

    /// `significant` digits, defaults to the working precision.
    std::string decimal(int significant = 0) const;
    std::string error_string() const;
    double to_double() const;

    Certified compare(const Rat &threshold) const;
    Certified compare(const HiReal &other) const;
    Certified sign() const;

    /// The represented point with zero error.
    HiReal center() const;
    static HiReal midpoint(const HiReal &a, const HiReal &b);

    friend HiReal operator+(const HiReal &a, const HiReal &b);
    friend HiReal operator-(const HiReal &a, const HiReal &b);
    friend HiReal operator*(const HiReal &a, const HiReal &b);
    friend HiReal operator/(const HiReal &a, const HiReal &b);
    friend HiReal operator-(const HiReal &a);

    friend HiReal abs(const HiReal &a);
    friend HiReal log(const HiReal &a);
    friend HiReal log1p(const HiReal &a);
    friend HiReal exp(const HiReal &a);
    friend HiReal rootn(const HiReal &a, unsigned long q);
    friend HiReal pow(const HiReal &a, unsigned long e);

private:
    void finish(int ternary);

    int digits_;
    mpfr_t value_;
    mpfr_t error_;
};

inline Certified flip(Certified c) noexcept {
    switch (c) {
    case Certified::less: return Certified::greater;
    case Certified::greater: return Certified::less;
    default: return Certified::indeterminate;
    }
}

struct EscalatedDecision {
    Certified decision;
    int digits;
};

/// Re-evaluates `make(digits)` with doubled precision until the comparison
/// with `threshold` is decided or `cap` digits have been tried.
template <class Make>
EscalatedDecision decide_escalating(Make &&make, const Rat &threshold, int digits, int cap = max_digits()) {
    for (;;) {
        const Certified c = make(digits).compare(threshold);
        if (c != Certified::indeterminate || digits >= cap) {
            return {c, digits};
        }
        digits = digits * 2 > cap ? cap : digits * 2;
    }
}

} // namespace reversor
