#pragma once

#include <utility>
#include <vector>

#include "dknot/laurent.hpp"
#include "dknot/numeric.hpp"

namespace dknot {

// Dense ordinary polynomial over the rationals: d[i] is the coefficient of
// t^i. The zero polynomial is the empty vector; otherwise the top coefficient
// is nonzero. Used as a workhorse for gcd, division, and partial fractions.
using DensePoly = std::vector<Rat>;

void dense_trim(DensePoly& p);
int dense_deg(const DensePoly& p);  // -1 for the zero polynomial
bool dense_is_zero(const DensePoly& p);

DensePoly dense_add(const DensePoly& a, const DensePoly& b);
DensePoly dense_sub(const DensePoly& a, const DensePoly& b);
DensePoly dense_mul(const DensePoly& a, const DensePoly& b);
DensePoly dense_scale(const DensePoly& a, const Rat& s);
DensePoly dense_neg(const DensePoly& a);

// Euclidean division a = q*b + r with deg r < deg b; b must be nonzero.
std::pair<DensePoly, DensePoly> dense_divmod(const DensePoly& a,
                                             const DensePoly& b);

// Monic greatest common divisor (gcd(0,0) = 0).
DensePoly dense_gcd(DensePoly a, DensePoly b);

// Extended gcd: returns (g, s, u) with s*a + u*b = g, g monic (or zero).
struct ExtGcd {
  DensePoly g, s, u;
};
ExtGcd dense_ext_gcd(const DensePoly& a, const DensePoly& b);

DensePoly dense_derivative(const DensePoly& a);
Rat dense_eval(const DensePoly& a, const Rat& x);

// Exact quotient; throws Error if the division is not exact.
DensePoly dense_exact_div(const DensePoly& a, const DensePoly& b);

// Remainder of a modulo b (deg b >= 1).
DensePoly dense_mod(const DensePoly& a, const DensePoly& b);

// Converts a Laurent polynomial to a dense polynomial together with the
// power of t that was factored out: p = t^shift * dense.
DensePoly laurent_to_dense(const RatLaurent& p, long& shift);
RatLaurent dense_to_laurent(const DensePoly& d, long shift = 0);

DensePoly dense_one();
DensePoly dense_constant(const Rat& c);

}  // namespace dknot
