#include "hrq/hermite.hpp"

#include <cassert>

namespace hrq {

IntPoly hermite_coeffs(unsigned long n) {
  IntPoly h0{{Int(1)}};
  if (n == 0) return h0;
  IntPoly h1{{Int(0), Int(2)}};
  if (n == 1) return h1;
  IntPoly prev = h0, cur = h1;
  for (unsigned long k = 1; k < n; ++k) {
    IntPoly next;
    next.coeffs.assign(cur.coeffs.size() + 1, Int(0));
    for (std::size_t i = 0; i < cur.coeffs.size(); ++i)
      next.coeffs[i + 1] = 2 * cur.coeffs[i];
    for (std::size_t i = 0; i < prev.coeffs.size(); ++i)
      next.coeffs[i] -= Int(2 * k) * prev.coeffs[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RationalPoly laguerre_coeffs(unsigned long m, const Rational& a) {
  RationalPoly p;
  p.coeffs.reserve(m + 1);
  for (unsigned long j = 0; j <= m; ++j) {
    Rational c = binomial_rational(Rational(m) + a, m - j) / Rational(factorial(j));
    if (j % 2 == 1) c = -c;
    p.coeffs.push_back(c);
  }
  p.normalize();
  return p;
}

BigFloat hermite_eval(unsigned long n, const BigFloat& x) {
  BigFloat prev(1);
  if (n == 0) return prev;
  BigFloat cur = 2 * x;
  for (unsigned long k = 1; k < n; ++k) {
    BigFloat next = 2 * x * cur - BigFloat(2 * k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

BigFloat refine_root(unsigned long n, BigFloat lo, BigFloat hi, const BigFloat& tol) {
  BigFloat flo = hermite_eval(n, lo);
  assert(flo != 0);
  // Bisect to a safe width, then polish with Newton (H_n' = 2n H_{n-1}).
  for (int i = 0; i < 40 && hi - lo > tol; ++i) {
    BigFloat mid = (lo + hi) / 2;
    BigFloat fm = hermite_eval(n, mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  BigFloat x = (lo + hi) / 2;
  for (int i = 0; i < 200; ++i) {
    BigFloat f = hermite_eval(n, x);
    BigFloat d = BigFloat(2 * n) * hermite_eval(n - 1, x);
    if (d == 0) break;
    BigFloat step = f / d;
    x -= step;
    if (x < lo || x > hi) x = (lo + hi) / 2;  // Newton left the bracket
    if (abs(step) < tol) break;
  }
  return x;
}

}  // namespace

std::vector<BigFloat> hermite_roots(unsigned long n, unsigned digits) {
  if (n == 0) return {};
  ScopedPrecision guard(digits + 15);
  BigFloat tol = pow(BigFloat(10), -static_cast<long>(digits) - 8);
  std::vector<BigFloat> roots{BigFloat(0)};
  for (unsigned long k = 2; k <= n; ++k) {
    // One root of H_k strictly between consecutive roots of H_{k-1}, plus one
    // beyond each end; all roots lie inside (-sqrt(2k+1), sqrt(2k+1)).
    BigFloat bound = sqrt(BigFloat(2 * k + 1));
    std::vector<BigFloat> next;
    next.reserve(k);
    next.push_back(refine_root(k, -bound, roots.front(), tol));
    for (std::size_t i = 1; i < roots.size(); ++i)
      next.push_back(refine_root(k, roots[i - 1], roots[i], tol));
    next.push_back(refine_root(k, roots.back(), bound, tol));
    roots = std::move(next);
  }
  // Symmetrize: roots come in +- pairs around 0.
  std::size_t half = roots.size() / 2;
  if (roots.size() % 2 == 1) roots[half] = 0;
  for (std::size_t i = 0; i < half; ++i) {
    BigFloat avg = (roots[roots.size() - 1 - i] - roots[i]) / 2;
    roots[roots.size() - 1 - i] = avg;
    roots[i] = -avg;
  }
  return roots;
}

}  // namespace hrq
