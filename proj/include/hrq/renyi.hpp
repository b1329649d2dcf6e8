#pragma once

// Renyi entropies, entropic moments, Tsallis entropies, entropic powers,
// entropy sums, and uncertainty-bound checks for stationary states of the
// D-dimensional isotropic harmonic oscillator (potential k r^2 / 2, scale
// alpha = k^(1/4), atomic units).
//
// Two regimes:
//   exact mode      integer order q >= 2; results are closed-form symbolic
//                   values (ExactLogSum / ScaledRational).
//   conjecture mode any rational order q > 0, q != 1; evaluated in
//                   high-precision floats through the real-order
//                   continuation.  Ground states are exact for every q > 0.
// The two kinds of results are never merged.
//
// The disequilibrium of a state is <rho> = W_2 = exp(-R_2), i.e. the order-2
// entropic moment.

#include <optional>
#include <string>
#include <vector>

#include "hrq/logsum.hpp"

namespace hrq {

/// One stationary state: Cartesian quantum numbers n_1..n_D plus the
/// oscillator scale alpha > 0.
class HarmonicState {
 public:
  HarmonicState(std::vector<unsigned long> n, Rational alpha = strict_one());

  unsigned long dimension() const { return n_.size(); }
  const std::vector<unsigned long>& quanta() const { return n_; }
  const Rational& alpha() const { return alpha_; }
  bool is_ground() const;
  unsigned long total_quanta() const;  // N = sum n_i
  unsigned long odd_count() const;     // number of odd n_i

 private:
  static Rational strict_one() { return Rational(1); }
  std::vector<unsigned long> n_;
  Rational alpha_;
};

enum class Space { position, momentum };

/// E_N = (N + D/2) omega with omega = alpha^2; symbolic in alpha.
ScaledRational energy(const HarmonicState& state);

/// Exact position-space Renyi entropy R_q[rho], integer q >= 2, symbolic in
/// alpha (weight -D/2 on log alpha).
ExactLogSum renyi_position(const HarmonicState& state, long q);

/// Momentum-space counterpart: identical up to the sign of the log alpha term.
ExactLogSum renyi_momentum(const HarmonicState& state, long q);

/// Ground-state closed form (D/2) log(pi q^(1/(q-1)) / alpha), valid for
/// every rational q > 0, q != 1.
ExactLogSum renyi_ground_state(unsigned long dimension, const Rational& q);

/// Exact entropic moment W_q[rho] = exp((1-q) R_q[rho]) assembled directly
/// from the product form; satisfies pi_exp = D(1-q)/2, alpha_exp = D(q-1)/2.
ScaledRational entropic_moment(const HarmonicState& state, long q,
                               Space space = Space::position);

/// R_q[rho] + R_qt[gamma], exact mode; its alpha weight is structurally zero.
ExactLogSum entropy_sum(const HarmonicState& state, long q, long qt);

/// Tsallis entropy T_q = (1 - W_q) / (q - 1), evaluated numerically.
BigFloat tsallis(const HarmonicState& state, long q, unsigned digits = 50);

/// Entropic power N_q = exp(R_q) as an exact product when the exponents
/// permit canonicalization; nullopt otherwise.
std::optional<ScaledRational> renyi_power_exact(const HarmonicState& state, long q);
BigFloat renyi_power(const HarmonicState& state, long q, unsigned digits = 50);

/// q* with 1/q + 1/q* = 2; requires q > 1/2.  q = 1 is a fixed point and is
/// rejected by the entropy routines, not here.
Rational conjugate_index(const Rational& q);

/// Sharp conjugated-order uncertainty bound
/// D log(pi q^(1/(2q-2)) q*^(1/(2q*-2))); requires q > 1/2, q != 1.
BigFloat bb_bound(unsigned long dimension, const Rational& q, unsigned digits = 50);
ExactLogSum bb_bound_exact(unsigned long dimension, const Rational& q);

/// Conjectured real-order entropy: evaluates the closed form with the
/// integral continuation of the Lauricella sum; rational q > 0, q != 1.
/// Quadrature-validated; exact-mode agreement holds at integer q.
BigFloat renyi_real(const HarmonicState& state, const Rational& q, Space space,
                    unsigned digits = 50);

enum class UncertaintyRegime { conjugated, zpv_general };

struct UncertaintyReport {
  double sum_value = 0;
  double bound_value = 0;
  double margin = 0;  // sum - bound
  bool satisfied = false;
  UncertaintyRegime regime = UncertaintyRegime::conjugated;
  Rational q;
  Rational qt;
};

/// Checks the entropic uncertainty sum against the applicable bound.
/// conjugated: qt is derived as q*.  zpv_general: explicit qt with
/// 1/q + 1/qt >= 2 required; violations raise std::domain_error ("not
/// applicable") rather than returning a verdict.
UncertaintyReport check_uncertainty(const HarmonicState& state, const Rational& q,
                                    std::optional<Rational> qt,
                                    UncertaintyRegime regime,
                                    unsigned digits = 50);

std::string to_string(UncertaintyRegime regime);

}  // namespace hrq
