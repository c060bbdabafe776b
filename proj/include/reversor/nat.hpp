#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reversor {

/// Arbitrary-precision non-negative integer.
class Nat {
public:
    Nat() = default;

    template <std::integral T>
    Nat(T value) { // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<T>) {
            if (value < 0) {
                throw std::invalid_argument("Nat: negative value");
            }
        }
        if constexpr (sizeof(T) <= sizeof(unsigned long)) {
            value_ = static_cast<unsigned long>(value);
        } else {
            value_ = mpz_class(std::to_string(value));
        }
    }

    explicit Nat(mpz_class value);

    /// Decimal digits only; leading '+' and surrounding whitespace rejected.
    static Nat parse(std::string_view text);

    const mpz_class &mpz() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool fits_ulong() const noexcept { return value_.fits_ulong_p(); }
    unsigned long to_ulong() const;
    std::string str() const { return value_.get_str(); }

    Nat pow(unsigned long exponent) const;

    Nat &operator+=(const Nat &rhs) {
        value_ += rhs.value_;
        return *this;
    }
    Nat &operator*=(const Nat &rhs) {
        value_ *= rhs.value_;
        return *this;
    }

    friend Nat operator+(Nat lhs, const Nat &rhs) { return lhs += rhs; }
    friend Nat operator*(Nat lhs, const Nat &rhs) { return lhs *= rhs; }

    friend bool operator==(const Nat &a, const Nat &b) noexcept { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Nat &a, const Nat &b) noexcept {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream &operator<<(std::ostream &os, const Nat &n) { return os << n.value_.get_str(); }

private:
    mpz_class value_{0};
};

/// base^exp exactly; ipow(b, 0) == 1.
Nat ipow(const Nat &base, unsigned long exp);

} // namespace reversor
