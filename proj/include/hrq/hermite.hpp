#pragma once

// Physicists' Hermite polynomials, generalized Laguerre polynomials, the
// parity selector connecting them, and high-precision Hermite roots.

#include <vector>

#include "hrq/polynomial.hpp"

namespace hrq {

/// Parity marker: nu = 0 for even n, 1 for odd n.
struct Parity {
  int nu;
};

inline Parity parity(unsigned long n) { return Parity{static_cast<int>(n % 2)}; }

/// H_n via H_{n+1} = 2x H_n - 2n H_{n-1}, H_0 = 1, H_1 = 2x.
IntPoly hermite_coeffs(unsigned long n);

/// L_m^{(a)}(x) = sum_j (-1)^j C(m+a, m-j) x^j / j! with rational a.
RationalPoly laguerre_coeffs(unsigned long m, const Rational& a);

/// Recurrence evaluation of H_n at a floating point, avoiding the
/// coefficient blowup of the dense form.
BigFloat hermite_eval(unsigned long n, const BigFloat& x);

/// The n real zeros of H_n, strictly increasing and symmetric about 0, each
/// correct to `digits` significant digits.  Newton iteration seeded by the
/// interlacing roots of H_{n-1}.
std::vector<BigFloat> hermite_roots(unsigned long n, unsigned digits);

}  // namespace hrq
