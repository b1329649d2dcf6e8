#pragma once

// Exact values of the form  coeff * prod(p_i^(e_i)) * pi^a * alpha^b  with a
// rational coefficient, prime radical bases with exponents in (0,1), and
// rational exponents on the two tracked symbols pi and alpha.  Canonical by
// construction, so equality is structural.

#include <map>
#include <string>

#include "hrq/rational.hpp"

namespace hrq {

class ScaledRational {
 public:
  ScaledRational() : coeff_(0) {}

  static ScaledRational from_rational(const Rational& r);
  /// coeff * pi^pi_exp * alpha^alpha_exp.
  static ScaledRational make(const Rational& coeff, const Rational& pi_exp,
                             const Rational& alpha_exp);
  static ScaledRational one() { return from_rational(Rational(1)); }
  static ScaledRational zero() { return ScaledRational(); }

  bool is_zero() const { return coeff_ == 0; }
  const Rational& coeff() const { return coeff_; }
  const Rational& pi_exp() const { return pi_exp_; }
  const Rational& alpha_exp() const { return alpha_exp_; }
  const std::map<Int, Rational>& radicals() const { return radicals_; }
  /// True when the value is a plain rational (no radicals, no symbols).
  bool is_rational() const {
    return radicals_.empty() && pi_exp_ == 0 && alpha_exp_ == 0;
  }

  /// Multiplies in base^expo for a positive rational base.  Fractional parts
  /// of the exponent are pushed onto prime radical bases; throws
  /// std::domain_error if such a base cannot be fully factored.
  void mul_base_pow(const Rational& base, const Rational& expo);

  ScaledRational& operator*=(const ScaledRational& rhs);
  ScaledRational& operator/=(const ScaledRational& rhs);
  friend ScaledRational operator*(ScaledRational a, const ScaledRational& b) {
    a *= b;
    return a;
  }
  friend ScaledRational operator/(ScaledRational a, const ScaledRational& b) {
    a /= b;
    return a;
  }
  ScaledRational pow(long e) const;
  void negate() { coeff_ = -coeff_; }

  /// Folds a concrete positive alpha into the value; exact.
  ScaledRational substitute_alpha(const Rational& alpha) const;

  /// Same value with alpha replaced by 1/alpha.
  ScaledRational with_inverted_alpha() const {
    ScaledRational r = *this;
    r.alpha_exp_ = -r.alpha_exp_;
    return r;
  }

  /// Numeric value at the current default precision; alpha must be positive
  /// when alpha_exp is nonzero.
  BigFloat eval(const BigFloat& alpha) const;
  BigFloat eval(const Rational& alpha) const { return eval(to_bigfloat(alpha)); }

  std::string to_string() const;

  friend bool operator==(const ScaledRational& a, const ScaledRational& b) {
    return a.coeff_ == b.coeff_ && a.pi_exp_ == b.pi_exp_ &&
           a.alpha_exp_ == b.alpha_exp_ && a.radicals_ == b.radicals_;
  }
  friend bool operator!=(const ScaledRational& a, const ScaledRational& b) {
    return !(a == b);
  }

 private:
  void add_radical(const Int& prime, const Rational& expo);
  void clear_if_zero();

  Rational coeff_;
  std::map<Int, Rational> radicals_;  // prime -> exponent in (0,1)
  Rational pi_exp_{0};
  Rational alpha_exp_{0};
};

namespace detail {
/// Prime factorization by trial division (then perfect-power reduction and a
/// primality test on the cofactor).  Throws std::domain_error if a composite
/// cofactor beyond the trial-division bound remains.
std::map<Int, unsigned long> factor_completely(Int v, unsigned long limit = 100000);
}  // namespace detail

/// Gamma(k + 1/2) = (2k)!/(4^k k!) * sqrt(pi).
ScaledRational gamma_half(unsigned long k);

/// ((n+1)/2)_{1/2} = Gamma(n/2 + 1) / Gamma((n+1)/2); carries pi^(+-1/2)
/// depending on the parity of n.
ScaledRational half_pochhammer(unsigned long n);

}  // namespace hrq
