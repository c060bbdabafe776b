#include <reversor/errors.hpp>
#include <reversor/logbounds.hpp>
#include <reversor/power.hpp>
#include <reversor/reversion.hpp>

#include <functional>

namespace reversor {

namespace {

void require_base(const Nat &z) {
    if (z < Nat(2)) {
        throw DomainError(ErrorKind::degenerate_base, "log z = 0 for z = 1");
    }
}

/// Decided side of `make(digits)` against `threshold`, with escalation.
Certified certify(const std::function<HiReal(int)> &make, const Rat &threshold, int digits) {
    return decide_escalating(make, threshold, digits).decision;
}

bool agrees(std::strong_ordering exact, Certified numeric) {
    if (exact == std::strong_ordering::equal) {
        return numeric == Certified::indeterminate;
    }
    return numeric == (exact < 0 ? Certified::less : Certified::greater);
}

Bound make_bound(const Nat &p, const Nat &zpow, const Nat &z, unsigned exponent, int digits) {
    Bound out{log_ratio(p, z, digits), exact_log_ratio(p, z), p <=> zpow, false};
    const auto numeric = certify([&](int d) { return log_ratio(p, z, d); }, Rat(long(exponent)), digits);
    out.numeric_agrees = agrees(out.vs_exponent, numeric);
    return out;
}

} // namespace

std::optional<Rat> exact_log_ratio(const Nat &p, const Nat &z) {
    require_base(z);
    if (p.is_zero()) {
        throw std::domain_error("log of zero");
    }
    // z = c^k with c not a perfect power
    mpz_class c = z.mpz();
    unsigned long k = 1;
    for (unsigned long e = mpz_sizeinbase(c.get_mpz_t(), 2); e >= 2; --e) {
        mpz_class r;
        if (mpz_root(r.get_mpz_t(), z.mpz().get_mpz_t(), e) != 0) {
            c = r;
            k = e;
            break;
        }
    }
    if (p == Nat(1)) {
        return Rat(0);
    }
    mpz_class rest = p.mpz();
    unsigned long m = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), c.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), c.get_mpz_t());
        ++m;
    }
    if (rest != 1) {
        return std::nullopt;
    }
    return Rat(mpz_class(m), mpz_class(k));
}

HiReal log_ratio(const Nat &p, const Nat &z, int digits) {
    if (auto exact = exact_log_ratio(p, z)) {
        return HiReal::from_rat(*exact, digits);
    }
    return log_nat(p, digits) / log_nat(z, digits);
}

Bound bound_b(const Triplet &t, unsigned n, int digits) {
    require_base(t.z);
    return make_bound(power_sum(t.x, t.y, n), ipow(t.z, n), t.z, n, digits);
}

Bound bound_a(const Triplet &t, unsigned n, int digits) {
    require_base(t.z);
    if (n == 0) {
        throw std::invalid_argument("bound_a: n must be positive");
    }
    return make_bound(power_sum(t.x, t.y, n - 1), ipow(t.z, n - 1), t.z, n - 1, digits);
}

LogBoundsReport gap_report(const Triplet &t, int digits) {
    const ReversionExponent re = reversion_exponent(t);
    const unsigned n = re.n;
    const Nat p_prev = power_sum(t.x, t.y, n - 1);
    const Nat p_n = power_sum(t.x, t.y, n);

    LogBoundsReport r{.triplet = t,
                      .tag = classify(t).tag,
                      .n = n,
                      .strict_at_n_minus_1 = re.strict_at_n_minus_1,
                      .a = bound_a(t, n, digits),
                      .b = bound_b(t, n, digits),
                      .gap = HiReal(digits),
                      .n_minus_b = HiReal(digits),
                      .k_n_minus_1 = Rat(p_n, p_prev),
                      .gap_identity_residual = HiReal(digits)};
    r.gap = r.b.value - r.a.value;
    r.n_minus_b = HiReal::from_long(n, digits) - r.b.value;

    // 0 < b - a < 1  <=>  p_{n-1} < p_n < z p_{n-1}
    r.gap_in_unit = p_prev < p_n && p_n < t.z * p_prev;
    // b - a > 1/2  <=>  k^2 > z
    r.k_squared_above_z = p_n * p_n > t.z * p_prev * p_prev;
    r.gap_above_half = r.k_squared_above_z;
    // n - b < 1/2  <=>  p_n^2 > z^{2n-1}
    r.n_minus_b_below_half = p_n * p_n > ipow(t.z, 2ul * n - 1);
    r.half_bounds_asserted = r.tag == TripletTag::acute_scalene;

    const auto gap_at = [&](int d) { return log_ratio(p_n, t.z, d) - log_ratio(p_prev, t.z, d); };
    const auto n_minus_b_at = [&](int d) { return HiReal::from_long(n, d) - log_ratio(p_n, t.z, d); };
    const Certified gap_pos = certify(gap_at, Rat(0), digits);
    const Certified gap_one = certify(gap_at, Rat(1), digits);
    const Certified gap_half = certify(gap_at, Rat(1, 2), digits);
    const Certified nb_half = certify(n_minus_b_at, Rat(1, 2), digits);
    r.numeric_flags_agree = r.a.numeric_agrees && r.b.numeric_agrees &&
                            (gap_pos == Certified::greater && gap_one == Certified::less) == r.gap_in_unit &&
                            (gap_half == Certified::greater) == r.gap_above_half &&
                            (nb_half == Certified::less) == r.n_minus_b_below_half;

    const HiReal identity = log_rat(r.k_n_minus_1, digits) / log_nat(t.z, digits);
    const HiReal diff = r.gap - identity;
    r.gap_identity_residual = abs(diff);
    r.gap_identity_holds = diff.sign() == Certified::indeterminate;

    r.pythagorean = t.z * t.z == t.x * t.x + t.y * t.y;
    r.a_is_two = r.a.exact && *r.a.exact == Rat(2);
    r.b_is_integer = r.b.exact && r.b.exact->is_integer();
    return r;
}

EqualizerResult solve_s(const Triplet &t, double tolerance, int digits) {
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("solve_s: tolerance must be positive");
    }
    const ReversionExponent re = reversion_exponent(t);
    const unsigned n = re.n;
    const Nat p_prev = power_sum(t.x, t.y, n - 1);
    const Nat p_n = power_sum(t.x, t.y, n);
    const Rat tol{mpq_class(tolerance)};

    EqualizerResult r;
    r.n = n;
    r.digits = digits;
    r.a = log_ratio(p_prev, t.z, digits);
    r.b = log_ratio(p_n, t.z, digits);
    r.order.n1_eq_a = ipow(t.z, n - 1) == p_prev;
    r.order.s_eq_b = p_prev == p_n; // only x = y = 1
    r.order.a_eq_s = r.order.n1_eq_a || r.order.s_eq_b;
    r.order.b_eq_n = false;

    if (r.order.a_eq_s) {
        // z^a = p_{n-1} = x^a + y^a: the root sits on the lower end.
        r.s = r.a;
        r.lo = r.a;
        r.hi = r.a;
        r.boundary_equality = true;
    } else {
        int d = digits;
        for (;;) {
            const PowerSumLog psl(t.x, t.y, d);
            const HiReal log_z = log_nat(t.z, d);
            const auto g = [&](const HiReal &s) { return s * log_z - psl(s); };

            HiReal lo = log_ratio(p_prev, t.z, d).center();
            HiReal hi = log_ratio(p_n, t.z, d).center();
            const Certified g_lo = g(lo).sign();
            const Certified g_hi = g(hi).sign();
            if (g_lo != Certified::less || g_hi != Certified::greater) {
                if (d >= max_digits()) {
                    throw DomainError(ErrorKind::no_sign_change,
                                      "g has no certified sign change on [a, b] for " + t.str());
                }
                d = std::min(2 * d, max_digits());
                continue;
            }
            unsigned iterations = 0;
            while ((hi - lo).compare(tol) == Certified::greater) {
                HiReal mid = HiReal::midpoint(lo, hi);
                ++iterations;
                const Certified side = g(mid).sign();
                if (side == Certified::less) {
                    lo = std::move(mid);
                } else if (side == Certified::greater) {
                    hi = std::move(mid);
                } else {
                    // mid is within evaluation error of the root
                    lo = mid;
                    hi = std::move(mid);
                    break;
                }
            }
            r.s = HiReal::midpoint(lo, hi);
            r.lo = std::move(lo);
            r.hi = std::move(hi);
            r.iterations = iterations;
            r.digits = d;
            break;
        }
    }

    const HiReal log_z = log_nat(t.z, r.digits);
    r.residual = abs(r.s * log_z - log_power_sum(t.x, t.y, r.s));
    r.residual_ok = r.residual.compare(HiReal::from_rat(tol, r.digits) * log_z) != Certified::greater;

    r.order.n1_le_a = true; // z^{n-1} <= p_{n-1} by minimality of n
    r.order.b_le_n = ipow(t.z, n) > p_n;
    r.order.a_le_s = r.order.a_eq_s || (r.s - r.a).sign() != Certified::less;
    r.order.s_le_b = r.order.s_eq_b || (r.b - r.s).sign() != Certified::less;
    r.ordering_ok = r.order.n1_le_a && r.order.a_le_s && r.order.s_le_b && r.order.b_le_n;
    return r;
}

WitnessReport no_reversion_witness(const Triplet &t, unsigned max_n, int digits) {
    if (t.z > t.x) {
        throw DomainError(ErrorKind::wrong_class, "z > x: " + t.str() + " reverses; use the bounds report instead");
    }
    require_base(t.z);
    WitnessReport w{.triplet = t, .equilateral = t.x_equals_y(), .log2_over_log_z = std::nullopt, .rows = {}, .all_exceed = true};
    if (w.equilateral) {
        w.log2_over_log_z = log_nat(Nat(2), digits) / log_nat(t.z, digits);
    }
    for (unsigned n = 1; n <= max_n; ++n) {
        const Nat p = power_sum(t.x, t.y, n);
        WitnessRow row{.n = n, .b = log_ratio(p, t.z, digits), .exceeds_n = ipow(t.z, n) < p, .numeric_agrees = false, .excess_residual = std::nullopt};
        const auto numeric = certify([&](int d) { return log_ratio(p, t.z, d); }, Rat(long(n)), digits);
        row.numeric_agrees = numeric == (row.exceeds_n ? Certified::greater : Certified::indeterminate);
        if (w.equilateral) {
            row.excess_residual = abs(row.b - HiReal::from_long(n, digits) - *w.log2_over_log_z);
        }
        w.all_exceed = w.all_exceed && row.exceeds_n;
        w.rows.push_back(std::move(row));
    }
    return w;
}

} // namespace reversor
