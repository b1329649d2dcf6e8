#include "hrq/lauricella.hpp"

#include <stdexcept>

#include "hrq/quadrature.hpp"

namespace hrq {

namespace {

void require_exact_order(long q) {
  if (q < 2) throw std::invalid_argument("exact mode requires integer order q >= 2");
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  r.normalize();
  return r;
}

/// Per-index factor of the multi-sum: ((nu-n)/2)_j / ((nu+1/2)_j j!) x^j,
/// with (nu-n)/2 = -m.
std::vector<Rational> factor_row(unsigned long m, Parity nu, const Rational& x) {
  Rational top = -Rational(m);
  Rational bottom(2 * nu.nu + 1, 2);
  std::vector<Rational> row(m + 1);
  Rational xp(1);
  for (unsigned long j = 0; j <= m; ++j) {
    row[j] = pochhammer(top, j) / (pochhammer(bottom, j) * Rational(factorial(j))) * xp;
    xp *= x;
  }
  return row;
}

}  // namespace

RationalPoly base_poly(unsigned long n, Parity nu, const Rational& q) {
  if (q <= 0) throw std::invalid_argument("base_poly: q must be positive");
  if (static_cast<unsigned long>(nu.nu) != n % 2)
    throw std::invalid_argument("base_poly: parity does not match n");
  unsigned long m = (n - nu.nu) / 2;
  RationalPoly p;
  p.coeffs = factor_row(m, nu, 1 / q);
  p.normalize();
  return p;
}

RationalPoly poly_pow(const RationalPoly& p, unsigned long e) {
  RationalPoly acc{{Rational(1)}};
  if (e == 0) return acc;
  RationalPoly sq = p;
  unsigned long rest = e;
  while (true) {
    if (rest & 1) acc = poly_mul(acc, sq);
    rest >>= 1;
    if (rest == 0) break;
    sq = poly_mul(sq, sq);
  }
  return acc;
}

Rational lauricella_f(unsigned long n, long q) {
  require_exact_order(q);
  Parity nu = parity(n);
  RationalPoly packed = poly_pow(base_poly(n, nu, Rational(q)), 2 * q);
  Rational a(2 * q * nu.nu + 1, 2);  // q*nu + 1/2
  Rational sum(0);
  Rational poch(1);
  for (std::size_t k = 0; k < packed.coeffs.size(); ++k) {
    sum += poch * packed.coeffs[k];
    poch *= a + Rational(k);
  }
  return sum;
}

Rational lauricella_f_naive(unsigned long n, long q, unsigned long long budget) {
  require_exact_order(q);
  Parity nu = parity(n);
  unsigned long m = (n - nu.nu) / 2;
  unsigned long vars = static_cast<unsigned long>(2 * q);

  double cost = std::pow(static_cast<double>(m + 1), static_cast<double>(vars));
  if (cost > static_cast<double>(budget))
    throw std::runtime_error("lauricella_f_naive: term budget exceeded");

  std::vector<Rational> row = factor_row(m, nu, Rational(1, q));
  Rational a(2 * q * nu.nu + 1, 2);
  std::vector<Rational> poch(vars * m + 1);
  poch[0] = 1;
  for (std::size_t k = 1; k < poch.size(); ++k)
    poch[k] = poch[k - 1] * (a + Rational(k - 1));

  // Odometer over (j_1, ..., j_2q) with an incremental product stack.
  std::vector<unsigned long> idx(vars, 0);
  std::vector<Rational> partial(vars + 1);
  partial[0] = 1;
  for (std::size_t v = 0; v < vars; ++v) partial[v + 1] = partial[v] * row[0];
  Rational sum(0);
  unsigned long total = 0;
  while (true) {
    sum += partial[vars] * poch[total];
    std::size_t v = vars;
    while (v > 0) {
      --v;
      if (idx[v] < m) {
        ++idx[v];
        ++total;
        break;
      }
      total -= idx[v];
      idx[v] = 0;
      if (v == 0) return sum;
    }
    for (std::size_t w = v; w < vars; ++w) partial[w + 1] = partial[w] * row[idx[w]];
  }
}

BigFloat lauricella_f_real(unsigned long n, const Rational& q, unsigned digits) {
  if (q <= 0 || q == 1)
    throw std::invalid_argument("lauricella_f_real: requires q > 0, q != 1");
  Parity nu = parity(n);
  unsigned long m = (n - nu.nu) / 2;
  if (m == 0) return BigFloat(1);

  ScopedPrecision guard(digits + 15);
  Rational a = q * nu.nu + Rational(1, 2);
  RationalPoly p = base_poly(n, nu, q);

  BigFloat a_minus_1 = to_bigfloat(a - 1);
  BigFloat two_q = to_bigfloat(2 * q);
  auto integrand = [&](const BigFloat& t) -> BigFloat {
    BigFloat body = abs(p.eval(t));
    BigFloat v = exp(-t);
    if (a_minus_1 != 0) v *= pow(t, a_minus_1);
    if (body != 0) v *= pow(body, two_q);
    else v = BigFloat(0);
    return v;
  };

  // Split at the zeros of P: t_i = q * r_i^2 with r_i the positive roots of
  // H_n, where |P|^(2q) loses smoothness for non-integer q.
  std::vector<BigFloat> cuts{BigFloat(0)};
  auto roots = hermite_roots(n, digits + 10);
  BigFloat qf = to_bigfloat(q);
  for (auto& r : roots)
    if (r > 0) cuts.push_back(qf * r * r);

  BigFloat rel_tol = pow(BigFloat(10), -static_cast<long>(digits) - 5);
  BigFloat integral(0);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    integral += tanh_sinh(integrand, cuts[i], cuts[i + 1], rel_tol);
  integral += exp_sinh_upper(integrand, cuts.back(), rel_tol);

  return integral / tgamma(to_bigfloat(a));
}

ScaledRational c0_coefficient(unsigned long n, long q) {
  require_exact_order(q);
  Parity nu = parity(n);
  unsigned long m = (n - nu.nu) / 2;
  // C((n+nu-1)/2, m) = Gamma(m + nu + 1/2) / (m! Gamma(nu + 1/2)); the
  // sqrt(pi) factors cancel, leaving a rational.
  ScaledRational binom = gamma_half(m + nu.nu);
  binom /= ScaledRational::from_rational(Rational(factorial(m))) * gamma_half(nu.nu);
  if (binom.pi_exp() != 0)
    throw std::logic_error("c0_coefficient: pi factors failed to cancel");
  Rational c = pochhammer(Rational(1, 2), static_cast<unsigned long>(q) * nu.nu) *
               pow_rational(binom.coeff(), 2 * q) * lauricella_f(n, q);
  if (detail::c0_sign_flip) c = -c;
  return ScaledRational::from_rational(c);
}

Rational cj_coefficient(unsigned long j, unsigned long n, long q) {
  require_exact_order(q);
  Parity nu = parity(n);
  unsigned long m = (n - nu.nu) / 2;
  ScaledRational binom = gamma_half(m + nu.nu);
  binom /= ScaledRational::from_rational(Rational(factorial(m))) * gamma_half(nu.nu);
  Rational pref = pochhammer(Rational(1, 2), static_cast<unsigned long>(q) * nu.nu) *
                  pow_rational(binom.coeff(), 2 * q);

  RationalPoly packed = poly_pow(base_poly(n, nu, Rational(q)), 2 * q);
  Rational a(2 * q * nu.nu + 1, 2);
  std::size_t kmax = packed.coeffs.size() - 1;
  std::vector<Rational> poch(kmax + j + 1);
  poch[0] = 1;
  for (std::size_t k = 1; k < poch.size(); ++k)
    poch[k] = poch[k - 1] * (a + Rational(k - 1));

  // Last argument of the (2q+1)-variate sum sits at x = 1 with parameters
  // (-j; 1/2), so its own index l terminates at j.
  Rational sum(0);
  for (unsigned long l = 0; l <= j; ++l) {
    Rational lterm = pochhammer(Rational(-static_cast<long>(j)), l) /
                     (pochhammer(Rational(1, 2), l) * Rational(factorial(l)));
    if (lterm == 0) continue;
    for (std::size_t k = 0; k <= kmax; ++k)
      sum += poch[k + l] * packed.coeffs[k] * lterm;
  }
  return pref * sum;
}

std::vector<LinearizationCoeff> linearization_coefficients(unsigned long n, long q) {
  require_exact_order(q);
  std::vector<LinearizationCoeff> out;
  unsigned long jmax = static_cast<unsigned long>(q) * n;
  out.reserve(jmax + 1);
  for (unsigned long j = 0; j <= jmax; ++j)
    out.push_back({j, ScaledRational::from_rational(cj_coefficient(j, n, q))});
  return out;
}

}  // namespace hrq
