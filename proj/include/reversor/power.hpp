#pragma once

#include <reversor/hireal.hpp>
#include <reversor/nat.hpp>
#include <reversor/rat.hpp>

#include <compare>

namespace reversor {

/// Exact three-way comparison of z^i against x^i + y^i.
std::strong_ordering cmp_power_sum(const Nat &z, const Nat &x, const Nat &y, unsigned long i);

HiReal log_nat(const Nat &value, int digits);

/// log of a positive rational, taken as log(num / den) in one division.
HiReal log_rat(const Rat &value, int digits);

/// log(x^e + y^e) for x >= y >= 1, e >= 0, evaluated as
/// e log x + log1p(exp(e (log y - log x))); x^e is never formed.
HiReal log_power_sum(const Nat &x, const Nat &y, const HiReal &e);
HiReal log_power_sum(const Nat &x, const Nat &y, const Rat &e, int digits);

/// Same evaluation with log x and log y computed once, for repeated use
/// inside root finders.
class PowerSumLog {
public:
    PowerSumLog(const Nat &x, const Nat &y, int digits);

    HiReal operator()(const HiReal &e) const;

    const HiReal &log_x() const noexcept { return log_x_; }
    const HiReal &log_y() const noexcept { return log_y_; }

private:
    HiReal log_x_;
    HiReal log_y_;
    HiReal log_ratio_; // log y - log x, <= 0
};

} // namespace reversor
