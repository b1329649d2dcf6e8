#include "hrq/quadrature.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hrq {

namespace {

// Shared level-doubling driver for the double-exponential rules.  `term`
// maps u to f(x(u))*dx/du.  Row truncation is tied to the requested
// tolerance so integrable endpoint singularities keep being sampled until
// their contributions drop below it.
class DoubleExponentialSum {
 public:
  DoubleExponentialSum(std::function<BigFloat(const BigFloat&)> term,
                       const BigFloat& rel_tol)
      : term_(std::move(term)), break_eps_(rel_tol / 100) {}

  BigFloat integrate(const BigFloat& rel_tol, int max_level) {
    BigFloat h(1);
    BigFloat total = sum_row(h, 0, 1);  // all integer multiples of h
    BigFloat value = h * total;
    for (int level = 1; level <= max_level; ++level) {
      h /= 2;
      total += sum_row(h, 1, 2);  // odd multiples only
      BigFloat next = h * total;
      BigFloat err = abs(next - value);
      value = next;
      if (err <= rel_tol * abs(value)) return value;
    }
    throw std::runtime_error("quadrature: tolerance not reached within refinement budget");
  }

 private:
  // Sums term(k*h) for k = start, start+step, ... in both directions.
  BigFloat sum_row(const BigFloat& h, int start, int step) {
    BigFloat acc(0);
    for (int dir : {+1, -1}) {
      int k = start;
      if (dir < 0 && start == 0) k = step;  // center counted once
      int quiet = 0;
      for (; k < 100000; k += step) {
        BigFloat t = term_(h * (dir * k));
        if (!boost::multiprecision::isfinite(t))
          throw std::runtime_error("quadrature: non-finite integrand value");
        acc += t;
        if (abs(t) <= break_eps_ * (abs(acc) + 1)) {
          if (++quiet >= 3) break;
        } else {
          quiet = 0;
        }
      }
    }
    return acc;
  }

  std::function<BigFloat(const BigFloat&)> term_;
  BigFloat break_eps_;
};

}  // namespace

BigFloat tanh_sinh(const Integrand& f, const BigFloat& a, const BigFloat& b,
                   const BigFloat& rel_tol, int max_level) {
  if (!(a < b)) throw std::invalid_argument("tanh_sinh: requires a < b");
  BigFloat width = b - a;
  BigFloat half_pi = const_pi() / 2;
  // Sample until even an x^(-1/2)-type endpoint factor is below tolerance.
  BigFloat frac_min = pow(rel_tol, 3);
  auto term = [&](const BigFloat& u) -> BigFloat {
    BigFloat v = half_pi * sinh(u);
    // sigma = 1/(1+exp(-2v)) is the relative position in (0,1); evaluate the
    // point from the nearer endpoint to keep endpoint distances accurate.
    BigFloat e = exp(-2 * abs(v));
    BigFloat near_frac = e / (1 + e);  // distance fraction from nearer end
    if (near_frac < frac_min) return BigFloat(0);
    BigFloat x = v >= 0 ? b - width * near_frac : a + width * near_frac;
    BigFloat dxdu = width * 2 * near_frac / (1 + e) * half_pi * cosh(u);
    return f(x) * dxdu;
  };
  DoubleExponentialSum de(term, rel_tol);
  return de.integrate(rel_tol, max_level);
}

BigFloat exp_sinh_upper(const Integrand& f, const BigFloat& a,
                        const BigFloat& rel_tol, int max_level) {
  BigFloat log_cut = 3 * log(rel_tol) - 40;
  auto term = [&](const BigFloat& u) -> BigFloat {
    // x = a + exp(u - exp(-u)); decays double-exponentially on both sides.
    BigFloat g = u - exp(-u);
    if (g < log_cut) return BigFloat(0);
    BigFloat delta = exp(g);
    if (!boost::multiprecision::isfinite(delta)) return BigFloat(0);
    BigFloat w = delta * (1 + exp(-u));
    return f(a + delta) * w;
  };
  DoubleExponentialSum de(term, rel_tol);
  return de.integrate(rel_tol, max_level);
}

const GaussLegendreRule& legendre_rule(unsigned order, unsigned digits) {
  static std::map<std::pair<unsigned, unsigned>, GaussLegendreRule> cache;
  auto key = std::make_pair(order, digits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  ScopedPrecision guard(digits + 15);
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  BigFloat tol = pow(BigFloat(10), -static_cast<long>(digits) - 8);
  auto legendre_pair = [&](const BigFloat& x) {
    BigFloat p0(1), p1 = x;
    if (order == 1) return std::make_pair(p1, p0);
    for (unsigned k = 2; k <= order; ++k) {
      BigFloat p2 = ((2 * k - 1) * x * p1 - BigFloat(k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::make_pair(p1, p0);  // P_m(x), P_{m-1}(x)
  };
  BigFloat pi = const_pi();
  for (unsigned i = 0; i < (order + 1) / 2; ++i) {
    BigFloat x = cos(pi * (BigFloat(i) + BigFloat(3) / 4) / (BigFloat(order) + BigFloat(1) / 2));
    for (int it_n = 0; it_n < 100; ++it_n) {
      auto [pm, pm1] = legendre_pair(x);
      BigFloat deriv = order * (x * pm - pm1) / (x * x - 1);
      BigFloat step = pm / deriv;
      x -= step;
      if (abs(step) < tol) break;
    }
    auto [pm, pm1] = legendre_pair(x);
    BigFloat deriv = order * (x * pm - pm1) / (x * x - 1);
    BigFloat w = 2 / ((1 - x * x) * deriv * deriv);
    rule.nodes[i] = -x;  // cos ordering gives the largest root first
    rule.weights[i] = w;
    rule.nodes[order - 1 - i] = x;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0;
  return cache.emplace(key, std::move(rule)).first->second;
}

namespace {

BigFloat gl_panel(const GaussLegendreRule& rule, const Integrand& f,
                  const BigFloat& a, const BigFloat& b) {
  BigFloat mid = (a + b) / 2, half = (b - a) / 2;
  BigFloat acc(0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

BigFloat gl_recurse(const GaussLegendreRule& rule, const Integrand& f,
                    const BigFloat& a, const BigFloat& b, const BigFloat& tol,
                    int depth, long& panels) {
  if (panels-- <= 0)
    throw std::runtime_error("adaptive quadrature: panel budget exhausted before tolerance");
  BigFloat mid = (a + b) / 2;
  BigFloat whole = gl_panel(rule, f, a, b);
  BigFloat left = gl_panel(rule, f, a, mid);
  BigFloat right = gl_panel(rule, f, mid, b);
  BigFloat err = abs(whole - (left + right));
  if (err <= tol || depth <= 0) {
    if (depth <= 0 && err > tol)
      throw std::runtime_error("adaptive quadrature: tolerance not reached within subdivision budget");
    return left + right;
  }
  BigFloat half_tol = tol / 2;
  return gl_recurse(rule, f, a, mid, half_tol, depth - 1, panels) +
         gl_recurse(rule, f, mid, b, half_tol, depth - 1, panels);
}

}  // namespace

BigFloat adaptive_gauss_legendre(const Integrand& f, const BigFloat& a,
                                 const BigFloat& b, const BigFloat& abs_tol,
                                 unsigned digits, int max_depth, long max_panels) {
  if (!(a < b)) throw std::invalid_argument("adaptive_gauss_legendre: requires a < b");
  const GaussLegendreRule& rule = legendre_rule(15, digits);
  long panels = max_panels;
  return gl_recurse(rule, f, a, b, abs_tol, max_depth, panels);
}

}  // namespace hrq
