#include <reversor/nat.hpp>

#include <cctype>

namespace reversor {

Nat::Nat(mpz_class value) : value_(std::move(value)) {
    if (sgn(value_) < 0) {
        throw std::invalid_argument("Nat: negative value");
    }
}

Nat Nat::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("Nat: empty string");
    }
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument("Nat: not a non-negative decimal integer: '" + std::string(text) + "'");
        }
    }
    return Nat(mpz_class(std::string(text), 10));
}

unsigned long Nat::to_ulong() const {
    if (!fits_ulong()) {
        throw std::overflow_error("Nat: value does not fit in unsigned long");
    }
    return value_.get_ui();
}

Nat Nat::pow(unsigned long exponent) const {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), exponent);
    return Nat(std::move(r));
}

Nat ipow(const Nat &base, unsigned long exp) { return base.pow(exp); }

} // namespace reversor
