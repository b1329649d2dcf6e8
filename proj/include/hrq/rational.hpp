#pragma once

// Exact arbitrary-precision scalar types used everywhere: integers and
// rationals on GMP, floats on MPFR (runtime-selectable decimal precision).

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace hrq {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

/// Sets the default MPFR precision (decimal digits) for the current scope.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits10)
      : previous_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits10);
  }
  ~ScopedPrecision() { BigFloat::default_precision(previous_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned previous_;
};

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

inline Int binomial_uint(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.backend().data(), n, k);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  return boost::multiprecision::pow(base, e);
}

/// base^e for integer e of either sign; throws on 0^negative.
inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("pow_rational: zero base, negative exponent");
    return Rational(0);
  }
  unsigned long mag = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-(e + 1)) + 1;
  Int num = pow_int(numerator(base), mag);
  Int den = pow_int(denominator(base), mag);
  return e > 0 ? Rational(num, den) : Rational(den, num);
}

/// floor(p/q) as an integer.
inline Int rational_floor(const Rational& x) {
  Int q;
  mpz_fdiv_q(q.backend().data(), numerator(x).backend().data(),
             denominator(x).backend().data());
  return q;
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline long to_long_checked(const Int& v, const char* what) {
  if (v < std::numeric_limits<long>::min() || v > std::numeric_limits<long>::max())
    throw std::overflow_error(std::string(what) + ": exponent out of range");
  return static_cast<long>(v);
}

/// Rising factorial z(z+1)...(z+k-1); 1 for k = 0.
inline Rational pochhammer(const Rational& z, unsigned long k) {
  Rational r(1), f(z);
  for (unsigned long i = 0; i < k; ++i, f += 1) r *= f;
  return r;
}

/// Generalized binomial coefficient C(x, k) = (x-k+1)_k / k! for rational x.
inline Rational binomial_rational(const Rational& x, unsigned long k) {
  return pochhammer(x - Rational(k) + 1, k) / Rational(factorial(k));
}

/// Parses "3", "-4/9", "0.75", "2.5e-2" into an exact rational.
Rational parse_rational(const std::string& text);

inline BigFloat to_bigfloat(const Rational& x) {
  BigFloat r;
  mpfr_set_q(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

inline BigFloat to_bigfloat(const Int& x) {
  BigFloat r;
  mpfr_set_z(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

/// Pi at the current default precision.
inline BigFloat const_pi() {
  BigFloat r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

/// Renders x with the given number of significant decimal digits.
/// Fixed notation in the human range, scientific outside it; zero renders
/// as "0.000..." with `digits` zeros.
std::string format_significant(const BigFloat& x, unsigned digits);

}  // namespace hrq
