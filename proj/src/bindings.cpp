// Python bindings for the main operations.  Orders and scales travel as
// exact strings ("2", "2/3", "0.75"); values come back as high-precision
// decimal strings plus a convenience double.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hrq/lauricella.hpp"
#include "hrq/oracle.hpp"
#include "hrq/renyi.hpp"

namespace py = pybind11;
using namespace hrq;

namespace {

Rational rational_arg(const py::object& value, const char* what) {
  if (py::isinstance<py::int_>(value))
    return parse_rational(py::str(value).cast<std::string>());
  if (py::isinstance<py::str>(value))
    return parse_rational(value.cast<std::string>());
  throw py::type_error(std::string(what) +
                       ": pass an int or an exact string like '2/3' or '0.75'");
}

Space space_arg(const std::string& s) {
  if (s == "position" || s == "pos") return Space::position;
  if (s == "momentum" || s == "mom") return Space::momentum;
  throw py::value_error("space must be 'position' or 'momentum'");
}

py::dict value_dict(const BigFloat& v, unsigned digits) {
  py::dict d;
  d["value"] = format_significant(v, digits);
  d["value_float"] = v.convert_to<double>();
  return d;
}

bool exact_order(const Rational& q) { return is_integer(q) && q >= 2; }

long order_long(const Rational& q) {
  return to_long_checked(numerator(q), "order q");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact (symbolic-rational) and high-precision Renyi entropies, entropic "
      "moments, and uncertainty checks for D-dimensional harmonic-oscillator "
      "states.";

  m.def(
      "renyi_entropy",
      [](const std::vector<unsigned long>& n, const py::object& q_obj,
         const py::object& alpha_obj, const std::string& space_str, unsigned digits,
         bool conjecture) {
        Rational q = rational_arg(q_obj, "q");
        Rational alpha = rational_arg(alpha_obj, "alpha");
        HarmonicState state(n, alpha);
        Space space = space_arg(space_str);
        py::dict d;
        if (exact_order(q)) {
          ExactLogSum r = space == Space::position
                              ? renyi_position(state, order_long(q))
                              : renyi_momentum(state, order_long(q));
          d = value_dict(r.eval(alpha, digits), digits);
          d["mode"] = "exact";
          d["symbolic"] = r.to_string();
          return d;
        }
        if (state.is_ground()) {
          ExactLogSum r = renyi_ground_state(state.dimension(), q);
          if (space == Space::momentum)
            r += ExactLogSum::alpha_term(Rational(static_cast<long>(state.dimension())));
          d = value_dict(r.eval(alpha, digits), digits);
          d["mode"] = "exact";
          d["symbolic"] = r.to_string();
          return d;
        }
        if (!conjecture)
          throw py::value_error(
              "non-integer q on an excited state requires conjecture=True");
        ScopedPrecision guard(digits + 20);
        d = value_dict(renyi_real(state, q, space, digits), digits);
        d["mode"] = "conjecture";
        return d;
      },
      py::arg("n"), py::arg("q"), py::arg("alpha") = "1",
      py::arg("space") = "position", py::arg("digits") = 30,
      py::arg("conjecture") = false,
      "Renyi entropy of the state with quantum numbers n; exact for integer "
      "q >= 2 and for ground states, conjecture mode otherwise.");

  m.def(
      "entropic_moment",
      [](const std::vector<unsigned long>& n, long q, const py::object& alpha_obj,
         const std::string& space_str, unsigned digits) {
        Rational alpha = rational_arg(alpha_obj, "alpha");
        HarmonicState state(n, alpha);
        ScaledRational w = entropic_moment(state, q, space_arg(space_str));
        ScopedPrecision guard(digits + 20);
        py::dict d = value_dict(w.eval(to_bigfloat(alpha)), digits);
        d["mode"] = "exact";
        d["symbolic"] = w.to_string();
        return d;
      },
      py::arg("n"), py::arg("q"), py::arg("alpha") = "1",
      py::arg("space") = "position", py::arg("digits") = 30,
      "Entropic moment W_q = exp((1-q) R_q), exact product form.");

  m.def(
      "entropy_sum",
      [](const std::vector<unsigned long>& n, long q, long qt,
         const py::object& alpha_obj, unsigned digits) {
        Rational alpha = rational_arg(alpha_obj, "alpha");
        HarmonicState state(n, alpha);
        ExactLogSum s = entropy_sum(state, q, qt);
        py::dict d = value_dict(s.eval(alpha, digits), digits);
        d["mode"] = "exact";
        d["symbolic"] = s.to_string();
        return d;
      },
      py::arg("n"), py::arg("q"), py::arg("qt"), py::arg("alpha") = "1",
      py::arg("digits") = 30, "Position-momentum entropy sum, exact mode.");

  m.def(
      "energy",
      [](const std::vector<unsigned long>& n, const py::object& alpha_obj) {
        Rational alpha = rational_arg(alpha_obj, "alpha");
        HarmonicState state(n, alpha);
        ScaledRational e = energy(state).substitute_alpha(alpha);
        py::dict d;
        d["exact"] = e.to_string();
        ScopedPrecision guard(40);
        d["value_float"] = e.eval(BigFloat(1)).convert_to<double>();
        return d;
      },
      py::arg("n"), py::arg("alpha") = "1", "Level energy (N + D/2) alpha^2.");

  m.def(
      "tsallis_entropy",
      [](const std::vector<unsigned long>& n, long q, const py::object& alpha_obj,
         unsigned digits) {
        HarmonicState state(n, rational_arg(alpha_obj, "alpha"));
        return value_dict(tsallis(state, q, digits), digits);
      },
      py::arg("n"), py::arg("q"), py::arg("alpha") = "1", py::arg("digits") = 30,
      "Tsallis entropy (1 - W_q)/(q - 1).");

  m.def(
      "renyi_entropic_power",
      [](const std::vector<unsigned long>& n, long q, const py::object& alpha_obj,
         unsigned digits) {
        HarmonicState state(n, rational_arg(alpha_obj, "alpha"));
        py::dict d = value_dict(renyi_power(state, q, digits), digits);
        if (auto exact = renyi_power_exact(state, q))
          d["symbolic"] = exact->to_string();
        return d;
      },
      py::arg("n"), py::arg("q"), py::arg("alpha") = "1", py::arg("digits") = 30,
      "Entropic power exp(R_q), with an exact product form when available.");

  m.def(
      "conjugate_index",
      [](const py::object& q_obj) {
        Rational qs = conjugate_index(rational_arg(q_obj, "q"));
        std::ostringstream os;
        os << qs;
        return os.str();
      },
      py::arg("q"), "q* with 1/q + 1/q* = 2, as an exact string.");

  m.def(
      "bb_bound",
      [](unsigned long dim, const py::object& q_obj, unsigned digits) {
        return value_dict(bb_bound(dim, rational_arg(q_obj, "q"), digits), digits);
      },
      py::arg("dim"), py::arg("q"), py::arg("digits") = 30,
      "Sharp conjugated-order uncertainty bound.");

  m.def(
      "check_uncertainty",
      [](const std::vector<unsigned long>& n, const py::object& q_obj,
         const py::object& qt_obj, const std::string& regime,
         const py::object& alpha_obj, unsigned digits) {
        HarmonicState state(n, rational_arg(alpha_obj, "alpha"));
        std::optional<Rational> qt;
        if (!qt_obj.is_none()) qt = rational_arg(qt_obj, "qt");
        UncertaintyRegime reg = regime == "zpv" ? UncertaintyRegime::zpv_general
                                                : UncertaintyRegime::conjugated;
        UncertaintyReport rep = check_uncertainty(state, rational_arg(q_obj, "q"),
                                                  qt, reg, digits);
        py::dict d;
        d["sum"] = rep.sum_value;
        d["bound"] = rep.bound_value;
        d["margin"] = rep.margin;
        d["satisfied"] = rep.satisfied;
        d["regime"] = to_string(rep.regime);
        std::ostringstream qs, qts;
        qs << rep.q;
        qts << rep.qt;
        d["q"] = qs.str();
        d["qt"] = qts.str();
        return d;
      },
      py::arg("n"), py::arg("q"), py::arg("qt") = py::none(),
      py::arg("regime") = "conjugated", py::arg("alpha") = "1",
      py::arg("digits") = 50,
      "Entropy-sum uncertainty check; raises ValueError when the regime does "
      "not apply.");

  m.def(
      "lauricella_f",
      [](unsigned long n, long q) {
        std::ostringstream os;
        os << lauricella_f(n, q);
        return os.str();
      },
      py::arg("n"), py::arg("q"),
      "Terminating Lauricella value F_q(n) as an exact rational string.");

  m.def(
      "hermite_coefficients",
      [](unsigned long n) {
        std::vector<std::string> out;
        for (auto& c : hermite_coeffs(n).coeffs) out.push_back(c.str());
        return out;
      },
      py::arg("n"), "Coefficients of H_n, index = degree, as integer strings.");
}
