#pragma once

// Terminating symmetric Lauricella-type sums for even powers of Hermite
// polynomials, in three forms:
//   - lauricella_f:        the collapsed single sum over the total degree,
//                          exact rationals, integer order q >= 2;
//   - lauricella_f_naive:  the literal 2q-fold nested sum (verification
//                          oracle, exponential cost, budget-guarded);
//   - lauricella_f_real:   the integral continuation to real order q > 0,
//                          q != 1, in high-precision floating point.
// Plus the linearization coefficients c_j used to validate the expansion of
// H_n(sqrt(alpha) x)^(2q) over H_{2j}(sqrt(alpha q) x).

#include "hrq/hermite.hpp"
#include "hrq/scaled_rational.hpp"

namespace hrq {

/// P(t) = sum_{j=0}^{m} [((nu-n)/2)_j / ((nu+1/2)_j j!)] (1/q)^j t^j with
/// m = (n-nu)/2.  Accepts any positive rational q.
RationalPoly base_poly(unsigned long n, Parity nu, const Rational& q);

/// p^e by binary exponentiation with exact rational convolution.
RationalPoly poly_pow(const RationalPoly& p, unsigned long e);

/// F_q(n): collapsed form sum_k (q*nu + 1/2)_k [t^k] P(t)^(2q).  The
/// symmetric multi-sum reduces to this because its Pochhammer prefactor
/// depends only on the total index.  Requires integer q >= 2.
Rational lauricella_f(unsigned long n, long q);

/// Literal 2q-fold nested sum; throws std::runtime_error when the term count
/// (m+1)^(2q) exceeds `budget`.
Rational lauricella_f_naive(unsigned long n, long q,
                            unsigned long long budget = 10000000ULL);

/// Real-order continuation via the integral representation
///   F_q(n) = (1/Gamma(a)) Int_0^inf t^(a-1) e^(-t) |P(t)|^(2q) dt,
/// a = q*nu + 1/2, which reproduces the collapsed sum termwise at integer q
/// and extends it to q > 0, q != 1.  Evaluated by double-exponential
/// quadrature split at the roots of P.
BigFloat lauricella_f_real(unsigned long n, const Rational& q, unsigned digits = 50);

/// c_0 = (1/2)_{q nu} C((n+nu-1)/2, (n-nu)/2)^(2q) F_q(n); the half-integer
/// binomial is formed from Gamma(k+1/2) ratios whose sqrt(pi) factors cancel,
/// so the result is purely rational.
ScaledRational c0_coefficient(unsigned long n, long q);

/// General linearization coefficient, as the double sum
///   pref * sum_{k,l} (q nu + 1/2)_{k+l} [t^k]P^(2q) (-j)_l / ((1/2)_l l!).
/// Vanishes for 2j > 2qn; equals c_0 at j = 0.
Rational cj_coefficient(unsigned long j, unsigned long n, long q);

struct LinearizationCoeff {
  unsigned long j;
  ScaledRational value;
};

/// All nonvanishing c_j for the order-n, order-q linearization (j <= q*n).
std::vector<LinearizationCoeff> linearization_coefficients(unsigned long n, long q);

namespace detail {
/// Verification-harness fault injection: when set, c0_coefficient returns
/// its negation.  Only the verify command's self-test touches this.
inline bool c0_sign_flip = false;
}  // namespace detail

}  // namespace hrq
