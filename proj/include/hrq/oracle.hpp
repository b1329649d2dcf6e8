#pragma once

// Independent verification paths for the entropic-moment factors
//   N1^(2q) * Int e^(-q alpha x^2) |H_n(sqrt(alpha) x)|^(2q) dx.
// The exact path expands H_n^(2q) termwise against Gaussian moments and
// deliberately shares nothing with the Lauricella machinery beyond the raw
// polynomial type.  The numerical paths are Gauss-Hermite (integer q) and
// root-split adaptive quadrature with a certified Gaussian tail bound
// (real q).

#include <vector>

#include "hrq/scaled_rational.hpp"

namespace hrq {

/// Nodes and weights against the weight e^(-x^2); exact for polynomial
/// degrees <= 2*order - 1.
struct QuadratureRule {
  std::vector<BigFloat> nodes;
  std::vector<BigFloat> weights;
  unsigned long order = 0;
};

QuadratureRule gauss_hermite_rule(unsigned long order, unsigned digits);

/// Exact 1-D entropic-moment factor, symbolic in the oscillator scale:
/// value = rational * q^(-1/2) * pi^((1-q)/2) * alpha^((q-1)/2).
ScaledRational moment_oracle_exact(unsigned long n, long q);

/// Same factor numerically via an order-m Gauss-Hermite rule; requires
/// m >= q*n + 1 (polynomial exactness threshold).
BigFloat moment_oracle_quadrature(unsigned long n, long q, const BigFloat& alpha,
                                  unsigned long m, unsigned digits);

/// Raw integral Int e^(-q alpha x^2) |H_n(sqrt(alpha) x)|^(2q) dx for real
/// q > 0 by adaptive quadrature split at the roots of H_n, truncated where a
/// certified tail bound underruns its share of the budget.  Absolute error
/// <= tol.  radius_doublings widens the certified truncation radius (used by
/// the truncation-stability checks).
BigFloat moment_oracle_real(unsigned long n, const Rational& q,
                            const BigFloat& alpha, const BigFloat& tol,
                            unsigned digits = 50, unsigned radius_doublings = 0);

/// N1^(2q) = ((alpha/pi)^(1/2) / (2^n n!))^q evaluated numerically; pairs
/// with moment_oracle_real to rebuild the normalized moment factor.
BigFloat normalization_pow_2q(unsigned long n, const Rational& q,
                              const BigFloat& alpha);

}  // namespace hrq
