#pragma once

#include <reversor/nat.hpp>

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace reversor {

/// Exact rational, always in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rat(const Nat &value) : value_(value.mpz()) {} // NOLINT(google-explicit-constructor)
    Rat(const mpz_class &num, const mpz_class &den);
    Rat(const Nat &num, const Nat &den) : Rat(num.mpz(), den.mpz()) {}
    Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}
    explicit Rat(mpq_class value);

    /// Accepts "P/Q" or "P" with optional leading '-'.
    static Rat parse(std::string_view text);

    const mpq_class &mpq() const noexcept { return value_; }
    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }

    int sign() const noexcept { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Always "num/den", also for integers.
    std::string str() const;

    Rat inverse() const;

    Rat &operator+=(const Rat &rhs);
    Rat &operator-=(const Rat &rhs);
    Rat &operator*=(const Rat &rhs);
    Rat &operator/=(const Rat &rhs);

    friend Rat operator+(Rat a, const Rat &b) { return a += b; }
    friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat &b) { return a /= b; }
    friend Rat operator-(const Rat &a) { return Rat(mpq_class(-a.value_)); }

    friend bool operator==(const Rat &a, const Rat &b) noexcept { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rat &a, const Rat &b) noexcept {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rat &r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

} // namespace reversor
