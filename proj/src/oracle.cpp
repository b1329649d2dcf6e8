#include "hrq/oracle.hpp"

#include <stdexcept>

#include "hrq/hermite.hpp"
#include "hrq/quadrature.hpp"

namespace hrq {

QuadratureRule gauss_hermite_rule(unsigned long order, unsigned digits) {
  if (order == 0) throw std::invalid_argument("gauss_hermite_rule: order must be >= 1");
  ScopedPrecision guard(digits + 15);
  QuadratureRule rule;
  rule.order = order;
  rule.nodes = hermite_roots(order, digits + 10);
  rule.weights.reserve(order);
  // w_i = 2^(m-1) m! sqrt(pi) / (m^2 H_{m-1}(x_i)^2)
  BigFloat top = pow(BigFloat(2), static_cast<long>(order) - 1) *
                 to_bigfloat(factorial(order)) * sqrt(const_pi());
  for (auto& x : rule.nodes) {
    BigFloat h = hermite_eval(order - 1, x);
    rule.weights.push_back(top / (BigFloat(order) * BigFloat(order) * h * h));
  }
  return rule;
}

ScaledRational moment_oracle_exact(unsigned long n, long q) {
  if (q < 2) throw std::invalid_argument("moment_oracle_exact: integer q >= 2 required");
  // Expand H_n(u)^(2q) by plain repeated convolution; no reuse of the
  // collapsed-sum machinery.
  IntPoly h = hermite_coeffs(n);
  std::vector<Int> power{Int(1)};
  for (long rep = 0; rep < 2 * q; ++rep) {
    std::vector<Int> next(power.size() + h.coeffs.size() - 1, Int(0));
    for (std::size_t i = 0; i < power.size(); ++i)
      for (std::size_t j = 0; j < h.coeffs.size(); ++j)
        next[i + j] += power[i] * h.coeffs[j];
    power = std::move(next);
  }
  // Int u^(2k) e^(-q u^2) du = (2k)!/(4^k k!) sqrt(pi) q^(-k-1/2); odd
  // powers vanish by parity.
  Rational sum(0);
  Rational qinv_pow(1);
  Rational qr(q);
  for (std::size_t d = 0; d < power.size(); d += 2) {
    unsigned long k = d / 2;
    if (power[d] != 0)
      sum += Rational(power[d]) * Rational(factorial(2 * k), pow_int(Int(4), k) * factorial(k)) * qinv_pow;
    qinv_pow /= qr;
  }
  Rational norm(pow_int(Int(2), n) * factorial(n));  // 2^n n!
  ScaledRational result = ScaledRational::make(
      sum / pow_rational(norm, q), Rational(1 - q, 2), Rational(q - 1, 2));
  result.mul_base_pow(qr, Rational(-1, 2));
  return result;
}

BigFloat moment_oracle_quadrature(unsigned long n, long q, const BigFloat& alpha,
                                  unsigned long m, unsigned digits) {
  if (q < 2) throw std::invalid_argument("moment_oracle_quadrature: integer q >= 2 required");
  if (m < static_cast<unsigned long>(q) * n + 1)
    throw std::invalid_argument(
        "moment_oracle_quadrature: order below the exactness threshold q*n + 1");
  if (alpha <= 0) throw std::invalid_argument("moment_oracle_quadrature: alpha must be positive");
  ScopedPrecision guard(digits + 15);
  QuadratureRule rule = gauss_hermite_rule(m, digits);
  // u = sqrt(q alpha) x maps the integral to the e^(-u^2) weight with the
  // polynomial H_n(u/sqrt(q))^(2q).
  BigFloat sqrt_q = sqrt(BigFloat(q));
  BigFloat acc(0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    BigFloat hv = hermite_eval(n, rule.nodes[i] / sqrt_q);
    acc += rule.weights[i] * pow(hv, 2 * q);
  }
  acc /= sqrt(BigFloat(q) * alpha);
  return acc * normalization_pow_2q(n, Rational(q), alpha);
}

BigFloat normalization_pow_2q(unsigned long n, const Rational& q, const BigFloat& alpha) {
  BigFloat base = sqrt(alpha / const_pi()) / to_bigfloat(pow_int(Int(2), n) * factorial(n));
  return pow(base, to_bigfloat(q));
}

BigFloat moment_oracle_real(unsigned long n, const Rational& q, const BigFloat& alpha,
                            const BigFloat& tol, unsigned digits,
                            unsigned radius_doublings) {
  if (q <= 0) throw std::invalid_argument("moment_oracle_real: q must be positive");
  if (alpha <= 0) throw std::invalid_argument("moment_oracle_real: alpha must be positive");
  if (tol <= 0) throw std::invalid_argument("moment_oracle_real: tol must be positive");
  ScopedPrecision guard(digits + 15);

  // Work in u = sqrt(alpha) x: value = 2 alpha^(-1/2) * Int_0^inf e^(-q u^2)
  // |H_n(u)|^(2q) du, an even integrand with kinks at the roots of H_n for
  // non-integer q.
  BigFloat qf = to_bigfloat(q);
  BigFloat two_q = 2 * qf;
  auto integrand = [&](const BigFloat& u) -> BigFloat {
    BigFloat h = abs(hermite_eval(n, u));
    BigFloat v = exp(-qf * u * u);
    return h == 0 ? BigFloat(0) : v * pow(h, two_q);
  };

  std::vector<BigFloat> cuts{BigFloat(0)};
  for (auto& r : hermite_roots(n, digits + 10))
    if (r > 0) cuts.push_back(r);

  // The u-integral may carry a total error of tol*sqrt(alpha)/2; reserve a
  // tenth of that for truncation and the rest for quadrature.
  BigFloat budget = tol * sqrt(alpha) / 2;

  // Certified truncation: for u >= R with R >= 1 and R^2 >= K/q,
  //   |H_n(u)|^(2q) <= S^(2q) u^K with S the coefficient 1-norm and K = 2qn,
  // whence the tail is at most S^(2q) R^(K-1) e^(-q R^2) / q.
  BigFloat coeff_norm(0);
  for (auto& c : hermite_coeffs(n).coeffs) coeff_norm += abs(to_bigfloat(c));
  BigFloat big_k = two_q * BigFloat(n);
  BigFloat radius = cuts.back() + 1;
  if (radius * radius < big_k / qf + 2) radius = sqrt(big_k / qf + 2);
  auto tail_bound = [&](const BigFloat& r) {
    return pow(coeff_norm, two_q) * pow(r, big_k - 1) * exp(-qf * r * r) / qf;
  };
  while (tail_bound(radius) >= budget / 10) radius *= BigFloat(5) / 4;
  for (unsigned i = 0; i < radius_doublings; ++i) radius *= 2;
  cuts.push_back(radius);

  BigFloat piece_tol = budget * 4 / (5 * BigFloat(static_cast<long>(cuts.size() - 1)));
  BigFloat half(0);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    half += adaptive_gauss_legendre(integrand, cuts[i], cuts[i + 1], piece_tol, digits);

  return 2 * half / sqrt(alpha);
}

}  // namespace hrq
