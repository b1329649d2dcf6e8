#pragma once

// Exact symbolic sums  sum_i w_i*log(b_i) + p*log(pi) + a*log(alpha)  with
// rational weights and rational bases.  Bases are stored reduced and > 1
// (a base below one is inverted with the weight negated), deduplicated, and
// never factored, so equality of canonical forms is structural.

#include <map>
#include <optional>
#include <string>

#include "hrq/scaled_rational.hpp"

namespace hrq {

class ExactLogSum {
 public:
  ExactLogSum() = default;

  static ExactLogSum zero() { return {}; }
  static ExactLogSum term(const Rational& base, const Rational& weight) {
    ExactLogSum s;
    s.add_term(base, weight);
    return s;
  }
  static ExactLogSum pi_term(const Rational& weight) {
    ExactLogSum s;
    s.pi_weight_ = weight;
    return s;
  }
  static ExactLogSum alpha_term(const Rational& weight) {
    ExactLogSum s;
    s.alpha_weight_ = weight;
    return s;
  }
  /// log of an exact product value; requires a positive value.
  static ExactLogSum log_of(const ScaledRational& v);

  void add_term(const Rational& base, const Rational& weight);
  void add_pi(const Rational& weight) { pi_weight_ += weight; }
  void add_alpha(const Rational& weight) { alpha_weight_ += weight; }

  ExactLogSum& operator+=(const ExactLogSum& rhs);
  ExactLogSum& operator-=(const ExactLogSum& rhs);
  friend ExactLogSum operator+(ExactLogSum a, const ExactLogSum& b) {
    a += b;
    return a;
  }
  friend ExactLogSum operator-(ExactLogSum a, const ExactLogSum& b) {
    a -= b;
    return a;
  }
  ExactLogSum scaled(const Rational& w) const;

  bool is_zero() const {
    return terms_.empty() && pi_weight_ == 0 && alpha_weight_ == 0;
  }
  const std::map<Rational, Rational>& terms() const { return terms_; }
  const Rational& pi_weight() const { return pi_weight_; }
  const Rational& alpha_weight() const { return alpha_weight_; }

  /// Folds a concrete positive rational alpha into the rational terms.
  ExactLogSum substitute_alpha(const Rational& alpha) const;

  /// Numeric value at working precision `digits` + 20 guard digits.  The
  /// alpha argument must be positive.
  BigFloat eval(const BigFloat& alpha, unsigned digits) const;
  BigFloat eval(const Rational& alpha, unsigned digits) const;
  /// eval rendered with `digits` significant digits.
  std::string eval_str(const Rational& alpha, unsigned digits) const;

  /// exp(sum) as an exact product, when every base raised to its weight can
  /// be canonicalized; nullopt otherwise (callers fall back to numerics).
  std::optional<ScaledRational> exp_to_product() const;

  /// Canonical rendering: alpha term first, rational bases ascending with
  /// small prime factors split out for display, pi last.
  std::string to_string() const;

  friend bool operator==(const ExactLogSum& a, const ExactLogSum& b) {
    return a.pi_weight_ == b.pi_weight_ && a.alpha_weight_ == b.alpha_weight_ &&
           a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExactLogSum& a, const ExactLogSum& b) {
    return !(a == b);
  }

 private:
  std::map<Rational, Rational> terms_;  // base > 1 -> weight
  Rational pi_weight_{0};
  Rational alpha_weight_{0};
};

}  // namespace hrq
