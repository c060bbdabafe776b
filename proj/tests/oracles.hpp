#pragma once

// Reference computations used by the tests. Nothing here calls into the
// library; everything is raw GMP, machine integers or long double.

#include <gmpxx.h>

#include <array>
#include <set>
#include <tuple>

namespace oracle {

using Triple = std::tuple<unsigned, unsigned, unsigned>; // (y, x, z)

/// v^n by repeated multiplication.
mpz_class power(unsigned long v, unsigned n);

/// Least i >= 1 with z^i > x^i + y^i, by direct iteration. 0 if none up to `limit`.
unsigned reversion_exponent(unsigned y, unsigned x, unsigned z, unsigned limit = 4096);

/// All (y, x, z) with y < x, y^2 + x^2 = z^2 and z <= z_max, from Euclid's
/// parametrisation with multiples.
std::set<Triple> pythagorean(unsigned z_max);

/// Fixed point of s -> log(x^s + y^s) / log z, started at `start`.
long double fixed_point_s(unsigned y, unsigned x, unsigned z, long double start);

/// log(x^e + y^e) / log z in long double.
long double log_ratio(unsigned y, unsigned x, unsigned z, unsigned e);

/// Acute, scalene-or-isosceles with z > x: the AcuteScalene class by its geometry.
bool acute_with_reversion(unsigned y, unsigned x, unsigned z);

} // namespace oracle
