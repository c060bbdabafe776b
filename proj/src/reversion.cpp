#include <reversor/errors.hpp>
#include <reversor/reversion.hpp>

#include <cassert>

namespace reversor {

Nat power_sum(const Nat &x, const Nat &y, unsigned long i) { return ipow(x, i) + ipow(y, i); }

Rat k_ratio(const Nat &x, const Nat &y, unsigned long i) { return Rat(power_sum(x, y, i + 1), power_sum(x, y, i)); }

unsigned reversion_exponent_ceiling(const Triplet &t) {
    if (t.z <= t.x) {
        throw DomainError(ErrorKind::no_reversion, "z <= x: the inequality never reverses for " + t.str());
    }
    Nat zp = t.z;
    Nat xp = t.x;
    unsigned m = 1;
    // z^m > 2 x^m  <=>  z^m > x^m + x^m
    while (zp <= xp + xp) {
        zp *= t.z;
        xp *= t.x;
        ++m;
    }
    return m;
}

ReversionExponent reversion_exponent(const Triplet &t) {
    if (t.z <= t.x) {
        throw DomainError(ErrorKind::no_reversion, "z <= x: the inequality never reverses for " + t.str());
    }
    Nat zp = 1;
    Nat xp = 1;
    Nat yp = 1;
    bool previous_strict = false; // z^{i-1} < p_{i-1}; false at i = 1 by convention
    // Terminates by reversion_exponent_ceiling(t): once z^i > 2 x^i >= p_i.
    for (unsigned i = 1;; ++i) {
        zp *= t.z;
        xp *= t.x;
        yp *= t.y;
        const auto c = zp <=> xp + yp;
        if (c > 0) {
            return {i, i >= 2 && previous_strict};
        }
        assert(zp <= xp + xp);
        previous_strict = c < 0;
    }
}

ReversionAnalysis analyze(const Triplet &t) {
    const ReversionExponent re = reversion_exponent(t);
    if (re.n == 1) {
        throw DomainError(ErrorKind::no_last_triangle,
                          "z > x + y: already reversed at exponent 1, no last triangle for " + t.str());
    }
    if (!re.strict_at_n_minus_1) {
        throw DomainError(ErrorKind::boundary_equality,
                          "z^(n-1) = x^(n-1) + y^(n-1) for " + t.str() + " (phi = 1); see the classification verdict");
    }
    ReversionAnalysis a;
    a.n = re.n;
    a.n_minus_1 = re.n - 1;
    a.strict_at_n_minus_1 = true;
    a.last_triangle = {ipow(t.y, a.n_minus_1), ipow(t.x, a.n_minus_1), ipow(t.z, a.n_minus_1)};
    a.p_n_minus_1 = a.last_triangle[0] + a.last_triangle[1];
    a.p_n = power_sum(t.x, t.y, a.n);
    a.z_pow_n_minus_1 = a.last_triangle[2];
    a.z_pow_n = a.z_pow_n_minus_1 * t.z;
    a.k_n_minus_1 = Rat(a.p_n, a.p_n_minus_1);
    a.phi = Rat(a.p_n_minus_1, a.z_pow_n_minus_1);
    a.rho_interval = {a.k_n_minus_1, Rat(a.z_pow_n, a.p_n_minus_1)};
    a.lambda_interval = {a.phi, Rat(t.z * a.p_n_minus_1, a.p_n)};
    a.lambda_interval_nondegenerate = a.lambda_interval.hi > a.lambda_interval.lo;

    const unsigned long sq = 2ul * a.n_minus_1;
    a.last_triangle_square_reversed = ipow(t.z, sq) > power_sum(t.x, t.y, sq);
    a.square_reversal_asserted = a.n > 2;
    return a;
}

OverreversionRecord overreversion(const ReversionAnalysis &a, const Nat &z, const Rat &rho) {
    if (!a.rho_interval.contains(rho)) {
        throw DomainError(ErrorKind::out_of_interval, "rho = " + rho.str() + " outside [" + a.rho_interval.lo.str() +
                                                          ", " + a.rho_interval.hi.str() + "]");
    }
    OverreversionRecord r{rho, Rat(z) / rho, rho * Rat(a.p_n_minus_1), Chain::strict_chain};
    if (r.zeta_n == Rat(a.p_n)) {
        r.chain = Chain::at_lower_bound;
    } else if (r.zeta_n == Rat(a.z_pow_n)) {
        r.chain = Chain::at_upper_bound;
    } else {
        assert(Rat(a.z_pow_n) > r.zeta_n && r.zeta_n > Rat(a.p_n));
    }
    return r;
}

OverreversionRecord overreversion(const Triplet &t, const Rat &rho) { return overreversion(analyze(t), t.z, rho); }

bool is_overreversor(const ReversionAnalysis &a, const Rat &lambda) { return a.lambda_interval.contains_open(lambda); }

bool is_overreversor(const Triplet &t, const Rat &lambda) { return is_overreversor(analyze(t), lambda); }

} // namespace reversor
