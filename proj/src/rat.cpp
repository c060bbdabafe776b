#include <reversor/rat.hpp>

#include <cctype>
#include <stdexcept>

namespace reversor {

namespace {

mpz_class parse_integer(std::string_view text, bool allow_sign) {
    std::string_view digits = text;
    if (allow_sign && !digits.empty() && digits.front() == '-') {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw std::invalid_argument("Rat: malformed integer '" + std::string(text) + "'");
    }
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument("Rat: malformed integer '" + std::string(text) + "'");
        }
    }
    return mpz_class(std::string(text), 10);
}

} // namespace

Rat::Rat(const mpz_class &num, const mpz_class &den) {
    if (sgn(den) == 0) {
        throw std::invalid_argument("Rat: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) {
    if (sgn(value_.get_den()) == 0) {
        throw std::invalid_argument("Rat: zero denominator");
    }
    value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_integer(text, true), mpz_class(1));
    }
    return Rat(parse_integer(text.substr(0, slash), true), parse_integer(text.substr(slash + 1), false));
}

std::string Rat::str() const { return value_.get_num().get_str() + "/" + value_.get_den().get_str(); }

Rat Rat::inverse() const {
    if (sign() == 0) {
        throw std::domain_error("Rat: inverse of zero");
    }
    return Rat(value_.get_den(), value_.get_num());
}

Rat &Rat::operator+=(const Rat &rhs) {
    value_ += rhs.value_;
    return *this;
}

Rat &Rat::operator-=(const Rat &rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rat &Rat::operator*=(const Rat &rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rat &Rat::operator/=(const Rat &rhs) {
    if (rhs.sign() == 0) {
        throw std::domain_error("Rat: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

} // namespace reversor
