#pragma once

// Dense univariate polynomials with exact coefficients, index = degree.
// Only the representation lives here; consumers bring their own arithmetic.

#include <vector>

#include "hrq/rational.hpp"

namespace hrq {

struct IntPoly {
  std::vector<Int> coeffs;  // coeffs[k] multiplies x^k

  void normalize() {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(Int(0));
  }
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs == b.coeffs;
  }
};

struct RationalPoly {
  std::vector<Rational> coeffs;

  void normalize() {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(Rational(0));
  }
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.size() == 1 && coeffs[0] == 0; }

  static RationalPoly from(const IntPoly& p) {
    RationalPoly r;
    r.coeffs.reserve(p.coeffs.size());
    for (auto& c : p.coeffs) r.coeffs.emplace_back(c);
    return r;
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  BigFloat eval(const BigFloat& x) const {
    BigFloat acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = acc * x + to_bigfloat(*it);
    return acc;
  }

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs == b.coeffs;
  }
};

}  // namespace hrq
