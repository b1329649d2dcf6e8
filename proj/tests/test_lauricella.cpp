#include <doctest.h>

#include "hrq/lauricella.hpp"

using namespace hrq;

namespace {

RationalPoly rp(std::vector<Rational> c) { return RationalPoly{std::move(c)}; }

}  // namespace

TEST_CASE("base_poly anchors") {
  CHECK(base_poly(0, parity(0), Rational(2)) == rp({Rational(1)}));
  CHECK(base_poly(2, parity(2), Rational(2)) == rp({Rational(1), Rational(-1)}));
  CHECK(base_poly(1, parity(1), Rational(3)) == rp({Rational(1)}));
  CHECK(base_poly(4, parity(4), Rational(2)).degree() == 2);
  CHECK_THROWS_AS(base_poly(2, parity(1), Rational(2)), std::invalid_argument);
}

TEST_CASE("poly_pow") {
  RationalPoly p = rp({Rational(1), Rational(-1)});
  CHECK(poly_pow(p, 2) == rp({Rational(1), Rational(-2), Rational(1)}));
  CHECK(poly_pow(p, 4) ==
        rp({Rational(1), Rational(-4), Rational(6), Rational(-4), Rational(1)}));
  CHECK(poly_pow(rp({Rational(1)}), 7) == rp({Rational(1)}));
  CHECK(poly_pow(p, 0) == rp({Rational(1)}));
}

TEST_CASE("lauricella_f anchors") {
  for (long q = 2; q <= 5; ++q) CHECK(lauricella_f(0, q) == Rational(1));
  CHECK(lauricella_f(1, 3) == Rational(1));
  CHECK(lauricella_f(2, 2) == Rational(41, 16));
  CHECK_THROWS_AS(lauricella_f(2, 1), std::invalid_argument);
}

TEST_CASE("lauricella_f equals the literal nested sum") {
  CHECK(lauricella_f_naive(2, 2) == Rational(41, 16));
  for (unsigned long n = 0; n <= 8; ++n)
    for (long q : {2, 3}) CHECK(lauricella_f(n, q) == lauricella_f_naive(n, q));
  // q = 4 spot checks here; the full grid runs in the acceptance suite.
  for (unsigned long n : {3ul, 6ul}) CHECK(lauricella_f(n, 4) == lauricella_f_naive(n, 4));
}

TEST_CASE("lauricella_f_naive enforces its term budget") {
  CHECK_THROWS_AS(lauricella_f_naive(8, 4, 1000), std::runtime_error);
}

TEST_CASE("lauricella_f positive on the exact grid") {
  for (unsigned long n = 0; n <= 8; ++n)
    for (long q = 2; q <= 4; ++q) CHECK(lauricella_f(n, q) > 0);
}

TEST_CASE("lauricella_f_real trivial and exact-order anchors") {
  ScopedPrecision guard(60);
  CHECK(lauricella_f_real(0, Rational(1, 2), 50) == 1);
  CHECK(lauricella_f_real(1, Rational(5, 2), 50) == 1);
  BigFloat v = lauricella_f_real(2, Rational(2), 50);
  CHECK(abs(v - BigFloat(41) / 16) < BigFloat("1e-40"));
  CHECK_THROWS_AS(lauricella_f_real(2, Rational(1), 50), std::invalid_argument);
  CHECK_THROWS_AS(lauricella_f_real(2, Rational(-2), 50), std::invalid_argument);
}

TEST_CASE("lauricella_f_real matches exact rationals to 45 digits") {
  ScopedPrecision guard(60);
  for (unsigned long n = 0; n <= 8; ++n)
    for (long q : {2, 3}) {
      BigFloat exact = to_bigfloat(lauricella_f(n, q));
      BigFloat real = lauricella_f_real(n, Rational(q), 50);
      CHECK(abs(real - exact) / exact < BigFloat("1e-45"));
    }
}

TEST_CASE("c0_coefficient anchors") {
  CHECK(c0_coefficient(0, 2) == ScaledRational::from_rational(Rational(1)));
  CHECK(c0_coefficient(1, 2) == ScaledRational::from_rational(Rational(3, 4)));
  CHECK(c0_coefficient(2, 2) == ScaledRational::from_rational(Rational(41, 256)));
  for (unsigned long n = 0; n <= 6; ++n)
    for (long q : {2, 3}) {
      ScaledRational c = c0_coefficient(n, q);
      CHECK(c.is_rational());
      CHECK(c.coeff() > 0);
    }
}

TEST_CASE("cj_coefficient reduces to c0 and respects the degree bound") {
  for (unsigned long n = 0; n <= 4; ++n)
    for (long q : {2, 3})
      CHECK(cj_coefficient(0, n, q) == c0_coefficient(n, q).coeff());
  // c_j = 0 once 2j exceeds the degree 2qn of H_n^(2q)
  CHECK(cj_coefficient(5, 2, 2) == 0);
  CHECK(cj_coefficient(7, 3, 2) == 0);
  CHECK(cj_coefficient(4, 2, 2) != 0);
  // fixed by the linearization identity below
  CHECK(cj_coefficient(1, 2, 2) == Rational(-43, 32));
}

namespace {

RationalPoly poly_mul_local(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  r.normalize();
  return r;
}

/// H_{2j}(sqrt(q) x) as a polynomial in x; even, so rational in q.
RationalPoly hermite_scaled(unsigned long two_j, const Rational& q) {
  RationalPoly h = RationalPoly::from(hermite_coeffs(two_j));
  Rational qpow(1);
  for (std::size_t d = 0; d < h.coeffs.size(); ++d) {
    if (d % 2 == 0) {
      h.coeffs[d] *= qpow;
      qpow *= q;
    } else {
      h.coeffs[d] *= 0;  // odd coefficients are zero already
    }
  }
  h.normalize();
  return h;
}

/// Linearization of H_n(x)^(2q) over H_{2j}(sqrt(q) x) with the empirically
/// fixed alternating sign.
RationalPoly linearized(unsigned long n, long q, bool alternate) {
  Parity nu = parity(n);
  unsigned long m = (n - nu.nu) / 2;
  Rational a_factor = Rational(pow_int(Int(2), 2 * static_cast<unsigned long>(q) * n)) *
                      pow_rational(Rational(factorial(m)), 2 * q);
  Rational q_shift = pow_rational(Rational(q), -q * nu.nu);
  RationalPoly acc{{Rational(0)}};
  for (auto& [j, cj] : linearization_coefficients(n, q)) {
    Rational w = cj.coeff() / Rational(pow_int(Int(2), 2 * j) * factorial(j));
    if (alternate && j % 2 == 1) w = -w;
    RationalPoly h = hermite_scaled(2 * j, Rational(q));
    RationalPoly term;
    term.coeffs.assign(h.coeffs.size(), Rational(0));
    for (std::size_t d = 0; d < h.coeffs.size(); ++d) term.coeffs[d] = h.coeffs[d] * w;
    if (term.coeffs.size() > acc.coeffs.size()) acc.coeffs.resize(term.coeffs.size(), Rational(0));
    for (std::size_t d = 0; d < term.coeffs.size(); ++d) acc.coeffs[d] += term.coeffs[d];
  }
  for (auto& c : acc.coeffs) c *= a_factor * q_shift;
  acc.normalize();
  return acc;
}

}  // namespace

TEST_CASE("linearization identity rebuilds H_n^(2q) with the (-1)^j sign") {
  long q = 2;
  for (unsigned long n = 0; n <= 4; ++n) {
    RationalPoly lhs{{Rational(1)}};
    RationalPoly h = RationalPoly::from(hermite_coeffs(n));
    for (long rep = 0; rep < 2 * q; ++rep) lhs = poly_mul_local(lhs, h);
    CHECK(linearized(n, q, true) == lhs);
  }
  // the unsigned variant does not reproduce the expansion
  CHECK_FALSE(linearized(1, 2, false) == poly_mul_local(
                  poly_mul_local(RationalPoly::from(hermite_coeffs(1)),
                                 RationalPoly::from(hermite_coeffs(1))),
                  poly_mul_local(RationalPoly::from(hermite_coeffs(1)),
                                 RationalPoly::from(hermite_coeffs(1)))));
}
