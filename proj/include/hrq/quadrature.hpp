#pragma once

// High-precision 1-D integration engines.
//   - tanh_sinh:     finite interval, tolerates integrable endpoint
//                    singularities (double-exponential transform).
//   - exp_sinh_upper: [a, inf) for exponentially decaying integrands.
//   - adaptive_gauss_legendre: classic bisection-adaptive Gauss-Legendre.
// All evaluate at the caller's current default BigFloat precision.

#include <functional>
#include <vector>

#include "hrq/rational.hpp"

namespace hrq {

using Integrand = std::function<BigFloat(const BigFloat&)>;

/// Integrates f over [a, b]; stops when successive refinement levels agree
/// to rel_tol.  Throws std::runtime_error if max_level refinements do not
/// converge.
BigFloat tanh_sinh(const Integrand& f, const BigFloat& a, const BigFloat& b,
                   const BigFloat& rel_tol, int max_level = 14);

/// Integrates f over [a, inf) for integrands decaying at least exponentially.
BigFloat exp_sinh_upper(const Integrand& f, const BigFloat& a,
                        const BigFloat& rel_tol, int max_level = 14);

/// Gauss-Legendre nodes/weights on [-1, 1], cached per (order, precision).
struct GaussLegendreRule {
  std::vector<BigFloat> nodes;
  std::vector<BigFloat> weights;
};
const GaussLegendreRule& legendre_rule(unsigned order, unsigned digits);

/// Bisection-adaptive Gauss-Legendre to absolute tolerance abs_tol.  Throws
/// std::runtime_error when the subdivision budget is exhausted before the
/// tolerance is met.
BigFloat adaptive_gauss_legendre(const Integrand& f, const BigFloat& a,
                                 const BigFloat& b, const BigFloat& abs_tol,
                                 unsigned digits, int max_depth = 60,
                                 long max_panels = 200000);

}  // namespace hrq
