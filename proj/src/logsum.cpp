#include "hrq/logsum.hpp"

#include <sstream>
#include <vector>

namespace hrq {

ExactLogSum ExactLogSum::log_of(const ScaledRational& v) {
  if (v.coeff() <= 0)
    throw std::domain_error("ExactLogSum::log_of: value must be positive");
  ExactLogSum s;
  s.add_term(v.coeff(), Rational(1));
  for (auto& [p, e] : v.radicals()) s.add_term(Rational(p), e);
  s.pi_weight_ = v.pi_exp();
  s.alpha_weight_ = v.alpha_exp();
  return s;
}

void ExactLogSum::add_term(const Rational& base, const Rational& weight) {
  if (base <= 0) throw std::domain_error("ExactLogSum: base must be positive");
  if (weight == 0 || base == 1) return;
  Rational b = base;
  Rational w = weight;
  if (b < 1) {
    b = 1 / b;
    w = -w;
  }
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_.emplace(b, w);
  } else {
    it->second += w;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactLogSum& ExactLogSum::operator+=(const ExactLogSum& rhs) {
  for (auto& [b, w] : rhs.terms_) add_term(b, w);
  pi_weight_ += rhs.pi_weight_;
  alpha_weight_ += rhs.alpha_weight_;
  return *this;
}

ExactLogSum& ExactLogSum::operator-=(const ExactLogSum& rhs) {
  *this += rhs.scaled(Rational(-1));
  return *this;
}

ExactLogSum ExactLogSum::scaled(const Rational& w) const {
  ExactLogSum s;
  if (w == 0) return s;
  for (auto& [b, t] : terms_) s.terms_.emplace(b, t * w);
  s.pi_weight_ = pi_weight_ * w;
  s.alpha_weight_ = alpha_weight_ * w;
  return s;
}

ExactLogSum ExactLogSum::substitute_alpha(const Rational& alpha) const {
  if (alpha <= 0)
    throw std::domain_error("substitute_alpha: alpha must be positive");
  ExactLogSum s = *this;
  Rational w = s.alpha_weight_;
  s.alpha_weight_ = 0;
  s.add_term(alpha, w);
  return s;
}

BigFloat ExactLogSum::eval(const BigFloat& alpha, unsigned digits) const {
  if (alpha <= 0) throw std::domain_error("ExactLogSum::eval: alpha must be positive");
  ScopedPrecision guard(digits + 20);
  BigFloat acc(0);
  for (auto& [b, w] : terms_) acc += to_bigfloat(w) * log(to_bigfloat(b));
  if (pi_weight_ != 0) acc += to_bigfloat(pi_weight_) * log(const_pi());
  if (alpha_weight_ != 0) acc += to_bigfloat(alpha_weight_) * log(alpha);
  return acc;
}

BigFloat ExactLogSum::eval(const Rational& alpha, unsigned digits) const {
  if (alpha <= 0) throw std::domain_error("ExactLogSum::eval: alpha must be positive");
  ScopedPrecision guard(digits + 20);
  return eval(to_bigfloat(alpha), digits);
}

std::string ExactLogSum::eval_str(const Rational& alpha, unsigned digits) const {
  return format_significant(eval(alpha, digits), digits);
}

std::optional<ScaledRational> ExactLogSum::exp_to_product() const {
  ScaledRational v = ScaledRational::one();
  try {
    for (auto& [b, w] : terms_) v.mul_base_pow(b, w);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  return ScaledRational::make(Rational(1), pi_weight_, alpha_weight_) * v;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& w,
                 const std::string& base) {
  if (w == 0) return;
  Rational aw = w < 0 ? -w : w;
  if (first) {
    if (w < 0) os << "-";
    first = false;
  } else {
    os << (w < 0 ? " - " : " + ");
  }
  if (aw != 1) os << aw << "·";
  os << "log(" << base << ")";
}

}  // namespace

std::string ExactLogSum::to_string() const {
  if (is_zero()) return "0";
  // Display form: split small prime factors out of each base and remerge.
  std::map<Rational, Rational> shown;
  for (auto& [b, w] : terms_) {
    auto push = [&](const Int& f, const Rational& wt) {
      if (f == 1) return;
      auto [it, fresh] = shown.emplace(Rational(f), wt);
      if (!fresh) {
        it->second += wt;
        if (it->second == 0) shown.erase(it);
      }
    };
    Int num = numerator(b), den = denominator(b);
    for (auto part : {std::pair{num, w}, std::pair{den, -w}}) {
      Int rest = part.first;
      for (Int p = 2; p <= 9973 && p * p <= rest; p == 2 ? p = 3 : p += 2) {
        unsigned long m = 0;
        while (rest % p == 0) {
          rest /= p;
          ++m;
        }
        if (m) push(p, part.second * m);
      }
      push(rest, part.second);
    }
  }
  std::ostringstream os;
  bool first = true;
  append_term(os, first, alpha_weight_, "α");
  for (auto& [b, w] : shown) {
    std::ostringstream bs;
    bs << b;
    append_term(os, first, w, bs.str());
  }
  append_term(os, first, pi_weight_, "π");
  if (first) return "0";
  return os.str();
}

}  // namespace hrq
