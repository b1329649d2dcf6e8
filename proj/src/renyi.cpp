#include "hrq/renyi.hpp"

#include <stdexcept>

#include "hrq/lauricella.hpp"

namespace hrq {

namespace {

void require_exact_order(long q) {
  if (q < 2) throw std::invalid_argument("exact mode requires integer order q >= 2");
}

void require_real_order(const Rational& q) {
  if (q <= 0 || q == 1)
    throw std::invalid_argument("order q must satisfy q > 0, q != 1");
}

/// Base of the odd-parity constant: (2q)! / (q! q^q), the Gamma-duplication
/// reduction of 4^q Gamma(q + 1/2) / (sqrt(pi) q^q).
Rational kbar_base(long q) {
  unsigned long uq = static_cast<unsigned long>(q);
  return Rational(factorial(2 * uq), factorial(uq) * pow_int(Int(q), uq));
}

ExactLogSum renyi_exact(const HarmonicState& state, long q, Space space) {
  require_exact_order(q);
  long d = static_cast<long>(state.dimension());
  ExactLogSum r;
  r.add_alpha(space == Space::position ? Rational(-d, 2) : Rational(d, 2));
  // K_q D: [(q - 1/2) log pi + (1/2) log q] / (q - 1)
  r.add_pi(Rational(d * (2 * q - 1), 2 * (q - 1)));
  r.add_term(Rational(q), Rational(d, 2 * (q - 1)));
  // Kbar_q N_O
  long odd = static_cast<long>(state.odd_count());
  if (odd > 0) r.add_term(kbar_base(q), -Rational(odd, q - 1));
  std::map<unsigned long, Rational> f_cache;  // repeated n_i share one F_q(n)
  for (unsigned long n : state.quanta()) {
    // (q/(q-1)) (-1)^n log ((n+1)/2)_{1/2}
    Rational w(q, q - 1);
    if (n % 2 == 1) w = -w;
    r += ExactLogSum::log_of(half_pochhammer(n)).scaled(w);
    // (1/(1-q)) log F_q(n)
    auto it = f_cache.find(n);
    if (it == f_cache.end()) it = f_cache.emplace(n, lauricella_f(n, q)).first;
    if (it->second <= 0)
      throw std::logic_error("renyi: Lauricella value must be positive");
    r.add_term(it->second, -Rational(1, q - 1));
  }
  return r;
}

}  // namespace

HarmonicState::HarmonicState(std::vector<unsigned long> n, Rational alpha)
    : n_(std::move(n)), alpha_(std::move(alpha)) {
  if (n_.empty()) throw std::invalid_argument("HarmonicState: dimension must be >= 1");
  if (alpha_ <= 0) throw std::invalid_argument("HarmonicState: alpha must be positive");
}

bool HarmonicState::is_ground() const {
  for (auto v : n_)
    if (v != 0) return false;
  return true;
}

unsigned long HarmonicState::total_quanta() const {
  unsigned long s = 0;
  for (auto v : n_) s += v;
  return s;
}

unsigned long HarmonicState::odd_count() const {
  unsigned long s = 0;
  for (auto v : n_) s += v % 2;
  return s;
}

ScaledRational energy(const HarmonicState& state) {
  Rational level(2 * state.total_quanta() + state.dimension(), 2);  // N + D/2
  return ScaledRational::make(level, Rational(0), Rational(2));
}

ExactLogSum renyi_position(const HarmonicState& state, long q) {
  return renyi_exact(state, q, Space::position);
}

ExactLogSum renyi_momentum(const HarmonicState& state, long q) {
  return renyi_exact(state, q, Space::momentum);
}

ExactLogSum renyi_ground_state(unsigned long dimension, const Rational& q) {
  require_real_order(q);
  if (dimension == 0) throw std::invalid_argument("dimension must be >= 1");
  long d = static_cast<long>(dimension);
  ExactLogSum r;
  r.add_alpha(Rational(-d, 2));
  r.add_pi(Rational(d, 2));
  r.add_term(q, Rational(d, 2) / (q - 1));
  return r;
}

ScaledRational entropic_moment(const HarmonicState& state, long q, Space space) {
  require_exact_order(q);
  long d = static_cast<long>(state.dimension());
  unsigned long uq = static_cast<unsigned long>(q);
  // W_q = N^(2q) (pi/alpha)^(D/2) q^(-D/2) prod_i q^(-q nu_i) A_{n_i,q} c_0(n_i)
  ScaledRational w = ScaledRational::make(
      Rational(1), Rational(-d * (q - 1), 2), Rational(d * (q - 1), 2));
  w.mul_base_pow(Rational(q), Rational(-d, 2));
  Rational coeff(1);
  for (unsigned long n : state.quanta()) {
    unsigned long m = n / 2;
    // N1^(2q) factor for this coordinate
    coeff /= pow_rational(Rational(pow_int(Int(2), n) * factorial(n)), q);
    if (n % 2 == 1) coeff /= Rational(pow_int(Int(q), uq));
    // A_{n,q}(nu) = 2^(2qn) (m!)^(2q)
    coeff *= Rational(pow_int(Int(2), 2 * uq * n)) * pow_rational(Rational(factorial(m)), 2 * q);
    ScaledRational c0 = c0_coefficient(n, q);
    coeff *= c0.coeff();
  }
  w *= ScaledRational::from_rational(coeff);
  if (space == Space::momentum) w = w.with_inverted_alpha();
  return w;
}

ExactLogSum entropy_sum(const HarmonicState& state, long q, long qt) {
  return renyi_position(state, q) + renyi_momentum(state, qt);
}

BigFloat tsallis(const HarmonicState& state, long q, unsigned digits) {
  ScopedPrecision guard(digits + 20);
  BigFloat w = entropic_moment(state, q).eval(to_bigfloat(state.alpha()));
  return (1 - w) / BigFloat(q - 1);
}

std::optional<ScaledRational> renyi_power_exact(const HarmonicState& state, long q) {
  return renyi_position(state, q).exp_to_product();
}

BigFloat renyi_power(const HarmonicState& state, long q, unsigned digits) {
  ScopedPrecision guard(digits + 20);
  return exp(renyi_position(state, q).eval(state.alpha(), digits));
}

Rational conjugate_index(const Rational& q) {
  if (q <= Rational(1, 2))
    throw std::domain_error("conjugate_index: requires q > 1/2");
  return q / (2 * q - 1);
}

ExactLogSum bb_bound_exact(unsigned long dimension, const Rational& q) {
  if (q <= Rational(1, 2) || q == 1)
    throw std::domain_error("bb_bound: requires q > 1/2, q != 1");
  if (dimension == 0) throw std::invalid_argument("dimension must be >= 1");
  Rational qstar = conjugate_index(q);
  Rational d(dimension);
  ExactLogSum b;
  b.add_pi(d);
  b.add_term(q, d / (2 * q - 2));
  b.add_term(qstar, d / (2 * qstar - 2));
  return b;
}

BigFloat bb_bound(unsigned long dimension, const Rational& q, unsigned digits) {
  return bb_bound_exact(dimension, q).eval(Rational(1), digits);
}

BigFloat renyi_real(const HarmonicState& state, const Rational& q, Space space,
                    unsigned digits) {
  require_real_order(q);
  ScopedPrecision guard(digits + 20);
  BigFloat qf = to_bigfloat(q);
  BigFloat pi = const_pi();
  long d = static_cast<long>(state.dimension());
  BigFloat log_alpha = log(to_bigfloat(state.alpha()));

  BigFloat r = (space == Space::position ? -d : d) * log_alpha / 2;
  // K_q D
  r += d * ((qf - BigFloat(1) / 2) * log(pi) + log(qf) / 2) / (qf - 1);
  // Kbar_q N_O with the Gamma form, valid at any real order
  long odd = static_cast<long>(state.odd_count());
  if (odd > 0) {
    BigFloat kbar = (qf * log(BigFloat(4)) + log(tgamma(qf + BigFloat(1) / 2)) -
                     log(pi) / 2 - qf * log(qf)) /
                    (1 - qf);
    r += odd * kbar;
  }
  std::map<unsigned long, BigFloat> f_cache;
  for (unsigned long n : state.quanta()) {
    BigFloat hp = log(half_pochhammer(n).eval(BigFloat(1)));
    r += (n % 2 == 1 ? -1 : 1) * qf / (qf - 1) * hp;
    auto it = f_cache.find(n);
    if (it == f_cache.end()) it = f_cache.emplace(n, lauricella_f_real(n, q, digits)).first;
    if (it->second <= 0)
      throw std::logic_error("renyi_real: Lauricella value must be positive");
    r += log(it->second) / (1 - qf);
  }
  return r;
}

UncertaintyReport check_uncertainty(const HarmonicState& state, const Rational& q,
                                    std::optional<Rational> qt,
                                    UncertaintyRegime regime, unsigned digits) {
  require_real_order(q);
  UncertaintyReport report;
  report.regime = regime;
  report.q = q;

  ScopedPrecision guard(digits + 20);
  BigFloat bound;
  if (regime == UncertaintyRegime::conjugated) {
    if (qt && *qt != conjugate_index(q))
      throw std::domain_error("conjugated regime derives qt = q*; do not pass another qt");
    report.qt = conjugate_index(q);
    bound = bb_bound(state.dimension(), q, digits);
  } else {
    if (!qt) throw std::invalid_argument("zpv regime requires an explicit qt");
    require_real_order(*qt);
    report.qt = *qt;
    if (1 / q + 1 / *qt < 2)
      throw std::domain_error(
          "not applicable: the zpv regime requires 1/q + 1/qt >= 2");
    if (q <= Rational(1, 2))
      throw std::domain_error("not applicable: bound evaluation requires q > 1/2");
    bound = bb_bound(state.dimension(), q, digits);
    if (*qt > Rational(1, 2) && *qt != 1) {
      BigFloat other = bb_bound(state.dimension(), *qt, digits);
      if (other > bound) bound = other;
    }
  }

  BigFloat sum = renyi_real(state, q, Space::position, digits) +
                 renyi_real(state, report.qt, Space::momentum, digits);
  BigFloat margin = sum - bound;
  report.sum_value = sum.convert_to<double>();
  report.bound_value = bound.convert_to<double>();
  report.margin = margin.convert_to<double>();
  BigFloat tolerance = pow(BigFloat(10), -12);
  if (abs(bound) > 1) tolerance *= abs(bound);
  report.satisfied = margin >= -tolerance;
  return report;
}

std::string to_string(UncertaintyRegime regime) {
  return regime == UncertaintyRegime::conjugated ? "conjugated" : "zpv-general";
}

}  // namespace hrq
