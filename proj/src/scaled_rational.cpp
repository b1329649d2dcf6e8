#include "hrq/scaled_rational.hpp"

#include <sstream>

namespace hrq {

namespace detail {

std::map<Int, unsigned long> factor_completely(Int v, unsigned long limit) {
  if (v <= 0) throw std::domain_error("factor_completely: positive input required");
  std::map<Int, unsigned long> out;
  auto strip = [&](const Int& p) {
    unsigned long m = 0;
    while (v % p == 0) {
      v /= p;
      ++m;
    }
    if (m) out[p] += m;
  };
  strip(Int(2));
  strip(Int(3));
  for (Int p = 5; p * p <= v && p <= limit; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (v == 1) return out;
  if (v <= Int(limit) * Int(limit)) {
    // Remaining cofactor below the square of the bound must be prime.
    out[v] += 1;
    return out;
  }
  // Reduce perfect powers, then accept a prime cofactor.
  for (unsigned long k = 64; k >= 2; --k) {
    Int root, rem;
    mpz_rootrem(root.backend().data(), rem.backend().data(), v.backend().data(), k);
    if (rem == 0 && root > 1) {
      auto sub = factor_completely(root, limit);
      for (auto& [p, m] : sub) out[p] += m * k;
      return out;
    }
  }
  if (mpz_probab_prime_p(v.backend().data(), 40) != 0) {
    out[v] += 1;
    return out;
  }
  throw std::domain_error("factor_completely: composite cofactor beyond factor bound");
}

}  // namespace detail

ScaledRational ScaledRational::from_rational(const Rational& r) {
  ScaledRational v;
  v.coeff_ = r;
  return v;
}

ScaledRational ScaledRational::make(const Rational& coeff, const Rational& pi_exp,
                                    const Rational& alpha_exp) {
  ScaledRational v;
  v.coeff_ = coeff;
  if (coeff != 0) {
    v.pi_exp_ = pi_exp;
    v.alpha_exp_ = alpha_exp;
  }
  return v;
}

void ScaledRational::clear_if_zero() {
  if (coeff_ == 0) {
    radicals_.clear();
    pi_exp_ = 0;
    alpha_exp_ = 0;
  }
}

void ScaledRational::add_radical(const Int& prime, const Rational& expo) {
  Rational e = radicals_[prime] + expo;
  Int whole = rational_floor(e);
  if (whole != 0)
    coeff_ *= pow_rational(Rational(prime), to_long_checked(whole, "radical"));
  e -= Rational(whole);
  if (e == 0)
    radicals_.erase(prime);
  else
    radicals_[prime] = e;
}

void ScaledRational::mul_base_pow(const Rational& base, const Rational& expo) {
  if (base <= 0) throw std::domain_error("mul_base_pow: base must be positive");
  if (coeff_ == 0) return;
  if (base == 1 || expo == 0) return;
  Int whole = rational_floor(expo);
  Rational frac = expo - Rational(whole);
  if (whole != 0) coeff_ *= pow_rational(base, to_long_checked(whole, "mul_base_pow"));
  if (frac == 0) return;
  for (auto& [p, m] : detail::factor_completely(numerator(base)))
    add_radical(p, Rational(m) * frac);
  for (auto& [p, m] : detail::factor_completely(denominator(base)))
    add_radical(p, -Rational(m) * frac);
}

ScaledRational& ScaledRational::operator*=(const ScaledRational& rhs) {
  if (coeff_ == 0 || rhs.coeff_ == 0) {
    *this = ScaledRational();
    return *this;
  }
  coeff_ *= rhs.coeff_;
  pi_exp_ += rhs.pi_exp_;
  alpha_exp_ += rhs.alpha_exp_;
  for (auto& [p, e] : rhs.radicals_) add_radical(p, e);
  return *this;
}

ScaledRational& ScaledRational::operator/=(const ScaledRational& rhs) {
  if (rhs.coeff_ == 0) throw std::domain_error("ScaledRational: division by zero");
  if (coeff_ == 0) return *this;
  coeff_ /= rhs.coeff_;
  pi_exp_ -= rhs.pi_exp_;
  alpha_exp_ -= rhs.alpha_exp_;
  for (auto& [p, e] : rhs.radicals_) add_radical(p, -e);
  return *this;
}

ScaledRational ScaledRational::pow(long e) const {
  ScaledRational r = one();
  if (e == 0) return r;
  if (coeff_ == 0) {
    if (e < 0) throw std::domain_error("ScaledRational: zero to negative power");
    return zero();
  }
  r.coeff_ = pow_rational(coeff_, e);
  r.pi_exp_ = pi_exp_ * e;
  r.alpha_exp_ = alpha_exp_ * e;
  for (auto& [p, ex] : radicals_) r.add_radical(p, ex * e);
  return r;
}

ScaledRational ScaledRational::substitute_alpha(const Rational& alpha) const {
  if (alpha <= 0) throw std::domain_error("substitute_alpha: alpha must be positive");
  ScaledRational r = *this;
  Rational e = r.alpha_exp_;
  r.alpha_exp_ = 0;
  if (!r.is_zero()) r.mul_base_pow(alpha, e);
  return r;
}

BigFloat ScaledRational::eval(const BigFloat& alpha) const {
  if (coeff_ == 0) return BigFloat(0);
  if (alpha_exp_ != 0 && alpha <= 0)
    throw std::domain_error("ScaledRational::eval: alpha must be positive");
  BigFloat v = to_bigfloat(coeff_);
  if (pi_exp_ != 0) v *= boost::multiprecision::pow(const_pi(), to_bigfloat(pi_exp_));
  if (alpha_exp_ != 0) v *= boost::multiprecision::pow(alpha, to_bigfloat(alpha_exp_));
  for (auto& [p, e] : radicals_)
    v *= boost::multiprecision::pow(to_bigfloat(p), to_bigfloat(e));
  return v;
}

namespace {

std::string exponent_suffix(const Rational& e) {
  if (e == 1) return "";
  std::ostringstream os;
  if (is_integer(e) && e > 0)
    os << "^" << e;
  else
    os << "^(" << e << ")";
  return os.str();
}

}  // namespace

std::string ScaledRational::to_string() const {
  if (coeff_ == 0) return "0";
  std::ostringstream os;
  bool wrote = false;
  if (coeff_ != 1 || (radicals_.empty() && pi_exp_ == 0 && alpha_exp_ == 0)) {
    os << coeff_;
    wrote = true;
  }
  auto sep = [&]() {
    if (wrote) os << "·";
    wrote = true;
  };
  for (auto& [p, e] : radicals_) {
    sep();
    os << p << exponent_suffix(e);
  }
  if (pi_exp_ != 0) {
    sep();
    os << "π" << exponent_suffix(pi_exp_);
  }
  if (alpha_exp_ != 0) {
    sep();
    os << "α" << exponent_suffix(alpha_exp_);
  }
  return os.str();
}

ScaledRational gamma_half(unsigned long k) {
  Rational c(factorial(2 * k), pow_int(Int(4), k) * factorial(k));
  return ScaledRational::make(c, Rational(1, 2), Rational(0));
}

ScaledRational half_pochhammer(unsigned long n) {
  // Gamma(n/2 + 1) / Gamma((n+1)/2).
  if (n % 2 == 0) {
    unsigned long k = n / 2;
    Rational c(pow_int(Int(4), k) * factorial(k) * factorial(k), factorial(2 * k));
    return ScaledRational::make(c, Rational(-1, 2), Rational(0));
  }
  unsigned long k = (n - 1) / 2;
  Rational c(factorial(2 * k + 2),
             pow_int(Int(4), k + 1) * factorial(k + 1) * factorial(k));
  return ScaledRational::make(c, Rational(1, 2), Rational(0));
}

}  // namespace hrq
