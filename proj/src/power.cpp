#include <reversor/power.hpp>

#include <stdexcept>

namespace reversor {

std::strong_ordering cmp_power_sum(const Nat &z, const Nat &x, const Nat &y, unsigned long i) {
    return ipow(z, i) <=> ipow(x, i) + ipow(y, i);
}

HiReal log_nat(const Nat &value, int digits) {
    if (value.is_zero()) {
        throw std::domain_error("log of zero");
    }
    return log(HiReal::from_nat(value, digits));
}

HiReal log_rat(const Rat &value, int digits) {
    if (value.sign() <= 0) {
        throw std::domain_error("log of non-positive rational");
    }
    return log(HiReal::from_nat(Nat(value.num()), digits) / HiReal::from_nat(Nat(value.den()), digits));
}

PowerSumLog::PowerSumLog(const Nat &x, const Nat &y, int digits)
    : log_x_(log_nat(x, digits)), log_y_(log_nat(y, digits)), log_ratio_(log_y_ - log_x_) {
    if (x < y) {
        throw std::invalid_argument("log_power_sum: requires x >= y");
    }
}

HiReal PowerSumLog::operator()(const HiReal &e) const {
    if (e.sign() == Certified::less) {
        throw std::invalid_argument("log_power_sum: negative exponent");
    }
    return e * log_x_ + log1p(exp(e * log_ratio_));
}

HiReal log_power_sum(const Nat &x, const Nat &y, const HiReal &e) { return PowerSumLog(x, y, e.digits())(e); }

HiReal log_power_sum(const Nat &x, const Nat &y, const Rat &e, int digits) {
    return log_power_sum(x, y, HiReal::from_rat(e, digits));
}

} // namespace reversor
