#include <doctest.h>

#include "hrq/oracle.hpp"
#include "hrq/renyi.hpp"

using namespace hrq;

TEST_CASE("HarmonicState validation and counters") {
  HarmonicState s({0, 1, 4}, Rational(2));
  CHECK(s.dimension() == 3);
  CHECK(s.total_quanta() == 5);
  CHECK(s.odd_count() == 1);
  CHECK_FALSE(s.is_ground());
  CHECK(HarmonicState({0, 0}).is_ground());
  CHECK_THROWS_AS(HarmonicState({}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(HarmonicState({1}, Rational(0)), std::invalid_argument);
}

TEST_CASE("energy anchors") {
  CHECK(energy(HarmonicState({0, 0, 0})).substitute_alpha(Rational(1)) ==
        ScaledRational::from_rational(Rational(3, 2)));
  CHECK(energy(HarmonicState({2})).substitute_alpha(Rational(1)) ==
        ScaledRational::from_rational(Rational(5, 2)));
  CHECK(energy(HarmonicState({1, 1}, Rational(2))).substitute_alpha(Rational(2)) ==
        ScaledRational::from_rational(Rational(12)));
}

TEST_CASE("ground-state entropy closed form") {
  // R_q = (D/2) log(pi q^(1/(q-1)) / alpha)
  for (unsigned long d : {1ul, 2ul, 3ul})
    for (long q : {2, 3, 4}) {
      HarmonicState ground(std::vector<unsigned long>(d, 0));
      CHECK(renyi_position(ground, q) == renyi_ground_state(d, Rational(q)));
      for (Rational a : {Rational(1, 2), Rational(1), Rational(3)})
        CHECK(renyi_position(ground, q).substitute_alpha(a) ==
              renyi_ground_state(d, Rational(q)).substitute_alpha(a));
    }
  CHECK(renyi_position(HarmonicState({0}), 2).eval_str(Rational(1), 6) == "0.918939");

  // rational orders: (D=1, q=1/2) -> (1/2) log(4 pi)
  ExactLogSum half = renyi_ground_state(1, Rational(1, 2));
  ExactLogSum expected = ExactLogSum::term(Rational(2), Rational(1)) +
                         ExactLogSum::pi_term(Rational(1, 2)) +
                         ExactLogSum::alpha_term(Rational(-1, 2));
  CHECK(half == expected);

  // (D=2, q=3) at alpha=pi: value collapses to (1/2) log 3
  ScopedPrecision guard(50);
  BigFloat v = renyi_ground_state(2, Rational(3)).eval(const_pi(), 40);
  CHECK(abs(v - log(BigFloat(3)) / 2) < BigFloat("1e-35"));

  CHECK_THROWS_AS(renyi_ground_state(2, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(renyi_ground_state(2, Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("excited 1-D entropies match the integration oracle") {
  ScopedPrecision guard(50);
  // n=1: R_2 = (1/2) log pi + (5/2) log 2 - log 3
  ExactLogSum r1 = renyi_position(HarmonicState({1}), 2);
  ExactLogSum expected1 = ExactLogSum::pi_term(Rational(1, 2)) +
                          ExactLogSum::term(Rational(2), Rational(5, 2)) +
                          ExactLogSum::term(Rational(3), Rational(-1)) +
                          ExactLogSum::alpha_term(Rational(-1, 2));
  CHECK(r1 == expected1);
  BigFloat v1 = r1.eval(Rational(1), 40);
  BigFloat w1 = moment_oracle_exact(1, 2).eval(BigFloat(1));
  CHECK(abs(v1 - (-log(w1))) < BigFloat("1e-35"));
  CHECK(format_significant(v1, 6) == "1.20662");

  // n=2: value and canonical rendering
  ExactLogSum r2 = renyi_position(HarmonicState({2}), 2);
  CHECK(r2.substitute_alpha(Rational(1)).to_string() ==
        "13/2·log(2) - log(41) + 1/2·log(π)");
  BigFloat v2 = r2.eval(Rational(1), 40);
  BigFloat w2 = moment_oracle_exact(2, 2).eval(BigFloat(1));
  CHECK(abs(v2 - (-log(w2))) < BigFloat("1e-35"));
  CHECK(format_significant(v2, 6) == "1.36425");
}

TEST_CASE("entropic moment anchors and invariants") {
  CHECK(entropic_moment(HarmonicState({0}), 2) == moment_oracle_exact(0, 2));
  CHECK(entropic_moment(HarmonicState({1}), 2) == moment_oracle_exact(1, 2));
  CHECK(entropic_moment(HarmonicState({2}), 2) == moment_oracle_exact(2, 2));
  for (long q : {2, 3, 4}) {
    HarmonicState s({1, 2, 3});
    ScaledRational w = entropic_moment(s, q);
    long d = 3;
    CHECK(w.pi_exp() == Rational(d * (1 - q), 2));
    CHECK(w.alpha_exp() == Rational(d * (q - 1), 2));
    CHECK(w.coeff() > 0);
  }
}

TEST_CASE("moment/entropy consistency: exp((1-q) R_q) = W_q") {
  std::vector<std::vector<unsigned long>> states;
  for (unsigned long n = 0; n <= 6; ++n) states.push_back({n});
  for (auto& n : std::vector<std::vector<unsigned long>>{
           {2, 3}, {5, 0}, {6, 6}, {1, 2, 6}, {4, 4, 4}, {0, 3, 5}})
    states.push_back(n);
  for (long q : {2, 3}) {
    for (auto& n : states) {
      HarmonicState s(n);
      auto prod = renyi_position(s, q).scaled(Rational(1 - q)).exp_to_product();
      REQUIRE(prod.has_value());
      CHECK(*prod == entropic_moment(s, q));
    }
  }
}

TEST_CASE("separability over coordinates") {
  for (long q : {2, 3}) {
    HarmonicState s({2, 0, 5});
    ExactLogSum sum = renyi_position(HarmonicState({2}), q) +
                      renyi_position(HarmonicState({0}), q) +
                      renyi_position(HarmonicState({5}), q);
    CHECK(renyi_position(s, q) == sum);
  }
}

TEST_CASE("momentum duality") {
  for (long q : {2, 3})
    for (auto& n : std::vector<std::vector<unsigned long>>{{0}, {3}, {1, 2}}) {
      HarmonicState s(n);
      for (Rational a : {Rational(1, 3), Rational(4)}) {
        CHECK(renyi_momentum(s, q).substitute_alpha(a) ==
              renyi_position(s, q).substitute_alpha(1 / a));
        CHECK(entropic_moment(s, q, Space::momentum).substitute_alpha(a) ==
              entropic_moment(s, q, Space::position).substitute_alpha(1 / a));
      }
    }
}

TEST_CASE("entropy sum is alpha-free") {
  HarmonicState s({1, 2});
  ExactLogSum sum = entropy_sum(s, 2, 3);
  CHECK(sum.alpha_weight() == 0);
  ScopedPrecision guard(50);
  BigFloat at_third = sum.eval(Rational(1, 3), 40);
  BigFloat at_one = sum.eval(Rational(1), 40);
  BigFloat at_five = sum.eval(Rational(5), 40);
  CHECK(abs(at_third - at_one) < BigFloat("1e-12"));
  CHECK(abs(at_five - at_one) < BigFloat("1e-12"));

  // ground, q = qt = 2, D = 1: log(2 pi)
  ExactLogSum g = entropy_sum(HarmonicState({0}), 2, 2);
  CHECK(g == ExactLogSum::pi_term(Rational(1)) + ExactLogSum::term(Rational(2), Rational(1)));

  // n=1 double entropy: 2 ((1/2) log pi + (5/2) log 2 - log 3)
  ExactLogSum d1 = entropy_sum(HarmonicState({1}), 2, 2);
  BigFloat v = d1.eval(Rational(7), 40);
  CHECK(format_significant(v, 6) == "2.41324");
}

TEST_CASE("tsallis and entropic power") {
  ScopedPrecision guard(50);
  HarmonicState ground({0});
  BigFloat t2 = tsallis(ground, 2, 40);
  BigFloat expected = 1 - 1 / sqrt(2 * const_pi());
  CHECK(abs(t2 - expected) < BigFloat("1e-35"));

  // T = (1 - e^((1-q) R)) / (q - 1) for an excited state
  HarmonicState s({3});
  for (long q : {2, 3}) {
    BigFloat r = renyi_position(s, q).eval(s.alpha(), 40);
    BigFloat via_r = (1 - exp((1 - q) * r)) / (q - 1);
    CHECK(abs(tsallis(s, q, 40) - via_r) < BigFloat("1e-35"));
  }

  auto n2 = renyi_power_exact(ground, 2);
  REQUIRE(n2.has_value());
  ScaledRational expected_power = ScaledRational::make(Rational(1), Rational(1, 2), Rational(-1, 2));
  expected_power.mul_base_pow(Rational(2), Rational(1, 2));
  CHECK(*n2 == expected_power);
  CHECK(abs(renyi_power(ground, 2, 40) - sqrt(2 * const_pi())) < BigFloat("1e-35"));
}

TEST_CASE("conjugate_index") {
  CHECK(conjugate_index(Rational(2)) == Rational(2, 3));
  CHECK(conjugate_index(Rational(3)) == Rational(3, 5));
  CHECK(conjugate_index(Rational(1)) == Rational(1));  // fixed point, documented
  CHECK(conjugate_index(Rational(3, 4)) == Rational(3, 2));
  CHECK_THROWS_AS(conjugate_index(Rational(1, 2)), std::domain_error);
}

TEST_CASE("bb_bound anchors") {
  ScopedPrecision guard(50);
  BigFloat b1 = bb_bound(1, Rational(2), 40);
  BigFloat expected = log(const_pi() * sqrt(BigFloat(2)) * pow(BigFloat(3) / 2, BigFloat(3) / 2));
  CHECK(abs(b1 - expected) < BigFloat("1e-30"));
  CHECK(format_significant(b1, 6) == "2.09950");
  CHECK(abs(bb_bound(2, Rational(2), 40) - 2 * b1) < BigFloat("1e-30"));

  // q -> 1 approaches D log(e pi)
  BigFloat near = bb_bound(1, Rational(100000001, 100000000), 40);
  CHECK(abs(near - (1 + log(const_pi()))) < BigFloat("1e-6"));

  CHECK_THROWS_AS(bb_bound(1, Rational(1), 40), std::domain_error);
  CHECK_THROWS_AS(bb_bound(1, Rational(1, 2), 40), std::domain_error);
}

TEST_CASE("ground-state sum saturates the conjugated bound structurally") {
  for (unsigned long d : {1ul, 2ul, 3ul})
    for (Rational q : {Rational(3, 4), Rational(2), Rational(3), Rational(5)}) {
      Rational qs = conjugate_index(q);
      ExactLogSum sum = renyi_ground_state(d, q) + renyi_ground_state(d, qs) +
                        ExactLogSum::alpha_term(Rational(d));
      CHECK(sum == bb_bound_exact(d, q));
    }
}

TEST_CASE("renyi entropies decrease in the order") {
  ScopedPrecision guard(50);
  for (auto& n : std::vector<std::vector<unsigned long>>{{2}, {1, 3}}) {
    HarmonicState s(n);
    BigFloat prev = renyi_position(s, 2).eval(s.alpha(), 40);
    for (long q : {3, 4, 5}) {
      BigFloat cur = renyi_position(s, q).eval(s.alpha(), 40);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("renyi_real agrees with exact mode at integer order") {
  ScopedPrecision guard(60);
  for (auto& n : std::vector<std::vector<unsigned long>>{{2}, {0, 1}}) {
    HarmonicState s(n, Rational(3, 2));
    for (long q : {2, 3}) {
      BigFloat exact = renyi_position(s, q).eval(s.alpha(), 50);
      BigFloat real = renyi_real(s, Rational(q), Space::position, 50);
      CHECK(abs(exact - real) < BigFloat("1e-12"));
      BigFloat exact_m = renyi_momentum(s, q).eval(s.alpha(), 50);
      BigFloat real_m = renyi_real(s, Rational(q), Space::momentum, 50);
      CHECK(abs(exact_m - real_m) < BigFloat("1e-12"));
    }
  }
}

TEST_CASE("renyi_real matches the ground-state closed form at rational orders") {
  ScopedPrecision guard(60);
  for (Rational q : {Rational(3, 4), Rational(5, 2)}) {
    HarmonicState ground({0, 0}, Rational(2));
    BigFloat closed = renyi_ground_state(2, q).eval(ground.alpha(), 50);
    BigFloat real = renyi_real(ground, q, Space::position, 50);
    CHECK(abs(closed - real) < BigFloat("1e-40"));
  }
}

TEST_CASE("large states evaluate consistently across precisions") {
  // High quantum numbers produce huge Lauricella rationals whose logs nearly
  // cancel; the guard digits must absorb that.
  HarmonicState big({50, 51, 52});
  ExactLogSum r = renyi_position(big, 5);
  BigFloat lo = r.eval(Rational(1), 25);
  BigFloat hi = r.eval(Rational(1), 80);
  CHECK(format_significant(lo, 20) == format_significant(hi, 20));
  auto w = r.scaled(Rational(-4)).exp_to_product();
  REQUIRE(w.has_value());
  CHECK(*w == entropic_moment(big, 5));
}

TEST_CASE("kbar reduction equals the Gamma form") {
  // (2q)!/(q! q^q) vs 4^q Gamma(q + 1/2) / (sqrt(pi) q^q)
  ScopedPrecision guard(60);
  for (long q : {2, 3, 4, 5}) {
    unsigned long uq = static_cast<unsigned long>(q);
    BigFloat reduced = to_bigfloat(Rational(factorial(2 * uq), factorial(uq) * pow_int(Int(q), uq)));
    BigFloat gamma_form = pow(BigFloat(4), q) * tgamma(BigFloat(q) + BigFloat(1) / 2) /
                          (sqrt(const_pi()) * pow(BigFloat(q), q));
    CHECK(abs(reduced - gamma_form) / reduced < BigFloat("1e-45"));
  }
}

TEST_CASE("check_uncertainty") {
  HarmonicState ground({0}, Rational(2));
  UncertaintyReport rep = check_uncertainty(ground, Rational(2), std::nullopt,
                                            UncertaintyRegime::conjugated, 50);
  CHECK(rep.satisfied);
  CHECK(std::abs(rep.margin) <= 1e-12);
  CHECK(rep.qt == Rational(2, 3));

  HarmonicState excited({2});
  UncertaintyReport rep2 = check_uncertainty(excited, Rational(2), std::nullopt,
                                             UncertaintyRegime::conjugated, 50);
  CHECK(rep2.satisfied);
  CHECK(rep2.margin > 1e-3);

  CHECK_THROWS_WITH_AS(check_uncertainty(ground, Rational(3), Rational(3),
                                         UncertaintyRegime::zpv_general, 50),
                       doctest::Contains("not applicable"), std::domain_error);

  // zpv regime accepts a valid pair and reports a nonnegative margin
  UncertaintyReport rep3 = check_uncertainty(excited, Rational(2), Rational(1, 2),
                                             UncertaintyRegime::zpv_general, 50);
  CHECK(rep3.satisfied);
}
