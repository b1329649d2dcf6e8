#include "hrq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <random>
#include <sstream>

#include "hrq/lauricella.hpp"
#include "hrq/oracle.hpp"
#include "hrq/renyi.hpp"

namespace hrq::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "harmonic-renyi/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<unsigned long> expand_spec(const std::string& spec) {
  auto dots = spec.find("..");
  auto to_index = [&](const std::string& s) -> unsigned long {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("invalid quantum number '" + s + "'");
    return std::stoul(s);
  };
  if (dots == std::string::npos) return {to_index(spec)};
  unsigned long lo = to_index(spec.substr(0, dots));
  unsigned long hi_raw;
  std::string hi_text = spec.substr(dots + 2);
  hi_raw = to_index(hi_text);
  std::vector<unsigned long> out;
  for (unsigned long v = lo; v <= hi_raw; ++v) out.push_back(v);
  return out;  // empty when lo > hi
}

/// Cartesian expansion of the per-dimension specs, lexicographic order.
std::vector<std::vector<unsigned long>> expand_states(const JobSpec& spec) {
  std::vector<std::string> dims = spec.n_specs;
  if (dims.empty()) throw UsageError("--n is required");
  if (dims.size() == 1 && spec.dim > 1) dims.assign(spec.dim, dims[0]);
  if (dims.size() != spec.dim)
    throw UsageError("--n needs one entry (broadcast) or exactly --dim entries");
  std::vector<std::vector<unsigned long>> axes;
  unsigned long long count = 1;
  for (auto& d : dims) {
    axes.push_back(expand_spec(d));
    count *= axes.back().size();
    if (count > spec.budget) throw UsageError("state grid exceeds --budget");
  }
  std::vector<std::vector<unsigned long>> states;
  if (count == 0) return states;
  std::vector<std::size_t> idx(axes.size(), 0);
  while (true) {
    std::vector<unsigned long> s;
    s.reserve(axes.size());
    for (std::size_t i = 0; i < axes.size(); ++i) s.push_back(axes[i][idx[i]]);
    states.push_back(std::move(s));
    std::size_t i = axes.size();
    while (i > 0) {
      --i;
      if (++idx[i] < axes[i].size()) break;
      idx[i] = 0;
      if (i == 0) return states;
    }
  }
}

std::vector<unsigned long> single_state(const JobSpec& spec) {
  auto states = expand_states(spec);
  if (states.size() != 1)
    throw UsageError("this command takes a single state; ranges are for table/verify");
  return states[0];
}

bool is_exact_order(const Rational& q) { return is_integer(q) && q >= 2; }

long as_long(const Rational& q) { return to_long_checked(numerator(q), "order q"); }

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string join_quanta(const std::vector<unsigned long>& n, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i) os << sep;
    os << n[i];
  }
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

Space parse_one_space(const std::string& s) {
  if (s == "pos" || s == "position") return Space::position;
  if (s == "mom" || s == "momentum") return Space::momentum;
  throw UsageError("invalid --space '" + s + "'");
}

std::vector<Space> spaces_of(const JobSpec& spec) {
  if (spec.space == "both") return {Space::position, Space::momentum};
  return {parse_one_space(spec.space)};
}

const char* space_name(Space s) {
  return s == Space::position ? "position" : "momentum";
}

/// Ground-state closed form for either space (momentum flips the alpha sign).
ExactLogSum ground_logsum(unsigned long dim, const Rational& q, Space space) {
  ExactLogSum r = renyi_ground_state(dim, q);
  if (space == Space::momentum)
    r += ExactLogSum::alpha_term(Rational(static_cast<long>(dim)));
  return r;
}

struct EntropyResult {
  std::string mode;  // exact | conjecture | limit
  std::optional<std::string> symbolic;
  std::string value;
  std::optional<std::string> note;
};

EntropyResult entropy_for(const JobSpec& spec, const std::vector<unsigned long>& n,
                          const Rational& q, Space space) {
  HarmonicState state(n, spec.alpha);
  EntropyResult res;
  if (is_exact_order(q)) {
    ExactLogSum r = space == Space::position ? renyi_position(state, as_long(q))
                                             : renyi_momentum(state, as_long(q));
    res.mode = "exact";
    res.symbolic = r.to_string();
    res.value = r.eval_str(spec.alpha, spec.digits);
    return res;
  }
  if (q <= 0 || q == 1) throw UsageError("order q must satisfy q > 0, q != 1");
  if (state.is_ground()) {
    ExactLogSum r = ground_logsum(state.dimension(), q, space);
    res.mode = "exact";
    res.symbolic = r.to_string();
    res.value = r.eval_str(spec.alpha, spec.digits);
    res.note = "non-integer order on a ground state: the closed form holds for all q > 0";
    return res;
  }
  if (!spec.conjecture)
    throw UsageError("non-integer q on an excited state requires --conjecture");
  ScopedPrecision guard(spec.digits + 20);
  res.mode = "conjecture";
  res.value = format_significant(renyi_real(state, q, space, spec.digits), spec.digits);
  res.note = "conjecture mode: non-integer order evaluated via the real-order "
             "continuation (quadrature-validated)";
  return res;
}

/// Limits q -> 0 (support volume) and q -> inf (max density), ground state only.
EntropyResult entropy_limit(const JobSpec& spec, const std::vector<unsigned long>& n,
                            const std::string& which, Space space) {
  HarmonicState state(n, spec.alpha);
  if (!state.is_ground())
    throw UsageError("q = " + which + " is exposed only for the ground state");
  EntropyResult res;
  res.mode = "limit";
  if (which == "0") {
    res.value = "inf";
    res.note = "q -> 0: the Gaussian support is unbounded";
    return res;
  }
  ExactLogSum r;  // (D/2) log(pi / alpha), sign of alpha per space
  long d = static_cast<long>(state.dimension());
  r.add_pi(Rational(d, 2));
  r.add_alpha(space == Space::position ? Rational(-d, 2) : Rational(d, 2));
  res.symbolic = r.to_string();
  res.value = r.eval_str(spec.alpha, spec.digits);
  res.note = "q -> inf: -log of the density maximum";
  return res;
}

int emit_entropy_like(const JobSpec& spec, std::ostream& out, const char* command,
                      const char* label, const std::vector<unsigned long>& n,
                      const std::vector<std::pair<std::string, EntropyResult>>& results) {
  if (spec.format == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["D"] = spec.dim;
    j["n"] = n;
    j["q"] = spec.q_text;
    j["alpha"] = rational_str(spec.alpha);
    j["digits"] = spec.digits;
    json rows = json::array();
    for (auto& [space, r] : results) {
      json row;
      row["space"] = space;
      row["mode"] = r.mode;
      row["symbolic"] = r.symbolic ? json(*r.symbolic) : json(nullptr);
      row["value"] = r.value;
      if (r.note) row["note"] = *r.note;
      rows.push_back(row);
    }
    j["results"] = rows;
    out << j.dump(2) << "\n";
    return 0;
  }
  if (spec.format == "csv") {
    out << "D,n,q,space,mode,symbolic,value\n";
    for (auto& [space, r] : results)
      out << spec.dim << "," << csv_field(join_quanta(n, ";")) << ","
          << csv_field(spec.q_text) << "," << space << "," << r.mode << ","
          << csv_field(r.symbolic.value_or("")) << "," << r.value << "\n";
    return 0;
  }
  for (auto& [space, r] : results) {
    out << "# " << command << " D=" << spec.dim << " n=(" << join_quanta(n, ",")
        << ") q=" << spec.q_text << " alpha=" << spec.alpha << " space=" << space
        << " mode=" << r.mode << "\n";
    if (r.note) out << "note: " << *r.note << "\n";
    if (r.symbolic) out << label << " = " << *r.symbolic << "\n";
    out << "value = " << r.value << "\n";
  }
  return 0;
}

}  // namespace

int run_entropy(const JobSpec& spec, std::ostream& out) {
  auto n = single_state(spec);
  std::vector<std::pair<std::string, EntropyResult>> results;
  for (Space space : spaces_of(spec)) {
    if (spec.q_text == "0" || spec.q_text == "inf")
      results.emplace_back(space_name(space), entropy_limit(spec, n, spec.q_text, space));
    else
      results.emplace_back(space_name(space),
                           entropy_for(spec, n, parse_rational(spec.q_text), space));
  }
  return emit_entropy_like(spec, out, "entropy", "R", n, results);
}

int run_moment(const JobSpec& spec, std::ostream& out) {
  auto n = single_state(spec);
  Rational q = parse_rational(spec.q_text);
  if (!is_exact_order(q))
    throw UsageError("moment requires an integer order q >= 2 (exact mode)");
  HarmonicState state(n, spec.alpha);
  std::vector<std::pair<std::string, EntropyResult>> results;
  for (Space space : spaces_of(spec)) {
    ScaledRational w = entropic_moment(state, as_long(q), space);
    EntropyResult r;
    r.mode = "exact";
    r.symbolic = w.to_string();
    ScopedPrecision guard(spec.digits + 20);
    r.value = format_significant(w.eval(to_bigfloat(spec.alpha)), spec.digits);
    results.emplace_back(space_name(space), r);
  }
  return emit_entropy_like(spec, out, "moment", "W", n, results);
}

int run_sum(const JobSpec& spec, std::ostream& out) {
  auto n = single_state(spec);
  Rational q = parse_rational(spec.q_text);
  Rational qt = spec.qt_text ? parse_rational(*spec.qt_text) : q;
  HarmonicState state(n, spec.alpha);
  EntropyResult r;
  if (is_exact_order(q) && is_exact_order(qt)) {
    ExactLogSum s = entropy_sum(state, as_long(q), as_long(qt));
    r.mode = "exact";
    r.symbolic = s.to_string();
    r.value = s.eval_str(spec.alpha, spec.digits);
  } else if (state.is_ground()) {
    ExactLogSum s = ground_logsum(state.dimension(), q, Space::position) +
                    ground_logsum(state.dimension(), qt, Space::momentum);
    r.mode = "exact";
    r.symbolic = s.to_string();
    r.value = s.eval_str(spec.alpha, spec.digits);
    r.note = "ground-state closed form, exact for all orders q > 0";
  } else {
    if (!spec.conjecture)
      throw UsageError("non-integer orders on excited states require --conjecture");
    ScopedPrecision guard(spec.digits + 20);
    BigFloat v = renyi_real(state, q, Space::position, spec.digits) +
                 renyi_real(state, qt, Space::momentum, spec.digits);
    r.mode = "conjecture";
    r.value = format_significant(v, spec.digits);
    r.note = "conjecture mode: non-integer order evaluated via the real-order continuation";
  }
  std::vector<std::pair<std::string, EntropyResult>> results;
  results.emplace_back("position+momentum", std::move(r));
  return emit_entropy_like(spec, out, "sum", "R", n, results);
}

int run_check_uncertainty(const JobSpec& spec, std::ostream& out) {
  auto n = single_state(spec);
  Rational q = parse_rational(spec.q_text);
  std::optional<Rational> qt;
  if (spec.qt_text) qt = parse_rational(*spec.qt_text);
  UncertaintyRegime regime = spec.regime == "zpv" ? UncertaintyRegime::zpv_general
                                                  : UncertaintyRegime::conjugated;
  HarmonicState state(n, spec.alpha);
  UncertaintyReport rep = check_uncertainty(state, q, qt, regime, spec.digits);
  if (spec.format == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "check-uncertainty";
    j["D"] = spec.dim;
    j["n"] = n;
    j["q"] = rational_str(rep.q);
    j["qt"] = rational_str(rep.qt);
    j["alpha"] = rational_str(spec.alpha);
    j["regime"] = to_string(rep.regime);
    j["sum"] = rep.sum_value;
    j["bound"] = rep.bound_value;
    j["margin"] = rep.margin;
    j["satisfied"] = rep.satisfied;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "# check-uncertainty D=" << spec.dim << " n=(" << join_quanta(n, ",")
      << ") q=" << rep.q << " qt=" << rep.qt << " regime=" << to_string(rep.regime)
      << " alpha=" << spec.alpha << "\n";
  out << "sum = " << format_double(rep.sum_value) << "\n";
  out << "bound = " << format_double(rep.bound_value) << "\n";
  out << "margin = " << format_double(rep.margin) << "\n";
  out << "satisfied = " << (rep.satisfied ? "true" : "false") << "\n";
  return 0;
}

namespace {

struct VerifyFailure {
  std::string where;
  std::string lhs;
  std::string rhs;
};

/// Deterministic multi-dimensional sample states for the grid checks.
std::vector<std::vector<unsigned long>> sample_states(
    const std::vector<unsigned long>& pool, unsigned long max_dim, std::size_t count) {
  std::mt19937 rng(20240615u);
  std::vector<std::vector<unsigned long>> states;
  if (pool.empty() || max_dim < 2) return states;
  while (states.size() < count) {
    unsigned long d = 2 + rng() % (max_dim - 1);
    std::vector<unsigned long> n;
    for (unsigned long i = 0; i < d; ++i) n.push_back(pool[rng() % pool.size()]);
    states.push_back(std::move(n));
  }
  return states;
}

}  // namespace

int run_verify(const JobSpec& spec, std::ostream& out) {
  std::vector<unsigned long> n_values;
  for (auto& s : spec.n_specs.empty() ? std::vector<std::string>{"0..8"} : spec.n_specs)
    for (auto v : expand_spec(s)) n_values.push_back(v);
  if (n_values.empty()) throw UsageError("verify: empty n grid");

  if (spec.conjecture) {
    Rational q = parse_rational(spec.q_text);
    if (q <= 0 || q == 1) throw UsageError("verify --conjecture: q must be > 0, != 1");
    ScopedPrecision guard(spec.digits + 20);
    BigFloat tol = pow(BigFloat(10), -8);
    BigFloat quad_tol = pow(BigFloat(10), -16);
    bool ok = true;
    out << "conjecture check: q=" << q << " alpha=1 D=1 tolerance=1e-8\n";
    for (unsigned long n : n_values) {
      HarmonicState state({n}, Rational(1));
      BigFloat lhs = renyi_real(state, q, Space::position, spec.digits);
      BigFloat raw = moment_oracle_real(n, q, BigFloat(1), quad_tol, spec.digits);
      BigFloat rhs = log(normalization_pow_2q(n, q, BigFloat(1)) * raw) / to_bigfloat(1 - q);
      BigFloat diff = abs(lhs - rhs);
      bool pass = diff <= tol;
      ok = ok && pass;
      out << (pass ? "ok" : "MISMATCH") << " n=" << n
          << " closed-form=" << format_significant(lhs, 20)
          << " quadrature=" << format_significant(rhs, 20)
          << " |diff|=" << format_significant(diff, 3) << "\n";
    }
    out << (ok ? "all checks passed" : "verification FAILED") << "\n";
    return ok ? 0 : 1;
  }

  std::vector<long> q_values;
  for (auto& s : split_commas(spec.q_text)) {
    Rational q = parse_rational(s);
    if (!is_exact_order(q)) throw UsageError("verify: orders must be integers >= 2");
    q_values.push_back(as_long(q));
  }

  std::vector<VerifyFailure> failures;
  std::size_t checks = 0, skipped = 0;

  // Lauricella collapse vs the literal nested multi-sum.
  for (unsigned long n : n_values)
    for (long q : q_values) {
      try {
        Rational naive = lauricella_f_naive(n, q, spec.budget);
        ++checks;
        Rational fast = lauricella_f(n, q);
        if (fast != naive)
          failures.push_back({"lauricella n=" + std::to_string(n) + " q=" + std::to_string(q),
                              rational_str(fast), rational_str(naive)});
      } catch (const std::runtime_error&) {
        ++skipped;  // term budget exceeded
      }
    }
  out << "lauricella cross-path: " << checks << " checks";
  if (skipped) out << " (" << skipped << " skipped by term budget)";
  out << "\n";

  // Exact moment vs the independent integration oracle, 1-D then sampled
  // multi-D states (the oracle factor is per-coordinate).
  std::size_t moment_checks = 0;
  bool fault_pending = spec.inject_fault;
  auto check_state = [&](const std::vector<unsigned long>& n, long q) {
    HarmonicState state(n, Rational(1));
    bool flip = fault_pending;
    if (flip) hrq::detail::c0_sign_flip = true;
    ScaledRational lhs = entropic_moment(state, q);
    if (flip) {
      hrq::detail::c0_sign_flip = false;
      fault_pending = false;
    }
    ScaledRational rhs = ScaledRational::one();
    for (unsigned long ni : n) rhs *= moment_oracle_exact(ni, q);
    ++moment_checks;
    if (!(lhs == rhs)) {
      std::ostringstream where;
      where << "moment D=" << n.size() << " n=(" << join_quanta(n, ",") << ") q=" << q;
      failures.push_back({where.str(), lhs.to_string(), rhs.to_string()});
    }
  };
  for (unsigned long n : n_values)
    for (long q : q_values) check_state({n}, q);
  for (auto& n : sample_states(n_values, spec.dim, 40))
    for (long q : q_values) check_state(n, q);
  out << "moment vs oracle: " << moment_checks << " checks\n";

  // Structural identities: momentum/position duality and the ground-state
  // closed form.
  std::size_t ident_checks = 0;
  Rational a(3, 2);
  for (long q : q_values) {
    for (unsigned long n : n_values) {
      HarmonicState state({n}, Rational(1));
      ++ident_checks;
      if (renyi_momentum(state, q).substitute_alpha(a) !=
          renyi_position(state, q).substitute_alpha(1 / a))
        failures.push_back({"duality n=" + std::to_string(n) + " q=" + std::to_string(q),
                            "momentum(alpha)", "position(1/alpha)"});
    }
    for (unsigned long d = 1; d <= spec.dim; ++d) {
      HarmonicState ground(std::vector<unsigned long>(d, 0), Rational(1));
      ++ident_checks;
      if (renyi_position(ground, q) != renyi_ground_state(d, Rational(q)))
        failures.push_back({"ground D=" + std::to_string(d) + " q=" + std::to_string(q),
                            renyi_position(ground, q).to_string(),
                            renyi_ground_state(d, Rational(q)).to_string()});
    }
  }
  out << "structural identities: " << ident_checks << " checks\n";

  for (auto& f : failures)
    out << "MISMATCH " << f.where << ": lhs=" << f.lhs << " rhs=" << f.rhs << "\n";
  out << (failures.empty() ? "all checks passed" : "verification FAILED") << "\n";
  return failures.empty() ? 0 : 1;
}

int run_table(const JobSpec& spec, std::ostream& out) {
  auto states = expand_states(spec);
  std::vector<Rational> q_values;
  for (auto& s : split_commas(spec.q_text)) q_values.push_back(parse_rational(s));
  auto spaces = spaces_of(spec);

  unsigned long long rows = static_cast<unsigned long long>(states.size()) *
                            q_values.size() * spaces.size();
  if (rows > spec.budget) throw UsageError("table exceeds --budget rows");

  for (auto& q : q_values) {
    if (is_exact_order(q)) continue;
    if (q <= 0 || q == 1) throw UsageError("order q must satisfy q > 0, q != 1");
    if (!spec.conjecture)
      for (auto& n : states)
        if (HarmonicState(n, spec.alpha).is_ground() == false)
          throw UsageError("non-integer q on excited states requires --conjecture");
  }

  struct Row {
    unsigned long dim;
    std::string n_csv, n_human, q, space, exact_form, value, energy;
    std::vector<unsigned long> n;
  };
  std::vector<Row> table;
  for (auto& n : states)
    for (auto& q : q_values)
      for (Space space : spaces) {
        HarmonicState state(n, spec.alpha);
        Row row;
        row.dim = spec.dim;
        row.n = n;
        row.n_csv = join_quanta(n, ";");
        row.n_human = join_quanta(n, ",");
        row.q = rational_str(q);
        row.space = space_name(space);
        {
          ScopedPrecision guard(spec.digits + 20);
          ScaledRational e = energy(state).substitute_alpha(spec.alpha);
          row.energy = format_significant(e.eval(BigFloat(1)), spec.digits);
        }
        if (is_exact_order(q)) {
          ExactLogSum r = space == Space::position
                              ? renyi_position(state, as_long(q))
                              : renyi_momentum(state, as_long(q));
          row.exact_form = r.to_string();
          row.value = r.eval_str(spec.alpha, spec.digits);
        } else if (state.is_ground()) {
          ExactLogSum r = ground_logsum(state.dimension(), q, space);
          row.exact_form = r.to_string();
          row.value = r.eval_str(spec.alpha, spec.digits);
        } else {
          ScopedPrecision guard(spec.digits + 20);
          row.value = format_significant(renyi_real(state, q, space, spec.digits),
                                         spec.digits);
        }
        table.push_back(std::move(row));
      }

  if (spec.format == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "table";
    json out_rows = json::array();
    for (auto& r : table) {
      json row;
      row["D"] = r.dim;
      row["n"] = r.n;
      row["q"] = r.q;
      row["space"] = r.space;
      row["exact_form"] = r.exact_form;
      row["value"] = r.value;
      row["energy"] = r.energy;
      out_rows.push_back(row);
    }
    j["rows"] = out_rows;
    out << j.dump(2) << "\n";
    return 0;
  }
  if (spec.format == "csv") {
    out << "D,n,q,space,exact_form,value,energy\n";
    for (auto& r : table)
      out << r.dim << "," << csv_field(r.n_csv) << "," << csv_field(r.q) << ","
          << r.space << "," << csv_field(r.exact_form) << "," << r.value << ","
          << r.energy << "\n";
    return 0;
  }
  for (auto& r : table)
    out << "D=" << r.dim << " n=(" << r.n_human << ") q=" << r.q << " space=" << r.space
        << " value=" << r.value << " energy=" << r.energy
        << (r.exact_form.empty() ? "" : "  R=" + r.exact_form) << "\n";
  return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobSpec spec;
  std::string n_text, alpha_text = "1";

  CLI::App app{"Exact and high-precision Renyi entropies of D-dimensional "
               "harmonic-oscillator states"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim", spec.dim, "dimension D")->check(CLI::PositiveNumber);
    sub->add_option("--n", n_text, "quantum numbers: comma list, entries 'k' or 'a..b'");
    sub->add_option("--q", spec.q_text, "Renyi order (integer, rational like 2/3, or decimal)");
    sub->add_option("--qt", spec.qt_text, "second Renyi order (momentum side)");
    sub->add_option("--alpha", alpha_text, "oscillator scale alpha (rational or decimal)");
    sub->add_option("--space", spec.space, "pos | mom | both")
        ->check(CLI::IsMember({"pos", "position", "mom", "momentum", "both"}));
    sub->add_option("--format", spec.format, "human | csv | json")
        ->check(CLI::IsMember({"human", "csv", "json"}));
    sub->add_option("--digits", spec.digits, "significant digits")
        ->check(CLI::Range(1u, 1000u));
    sub->add_option("--regime", spec.regime, "conjugated | zpv")
        ->check(CLI::IsMember({"conjugated", "zpv"}));
    sub->add_flag("--conjecture", spec.conjecture, "enable real-order (non-integer q) mode");
    sub->add_option("--budget", spec.budget, "grid / term budget");
    return sub;
  };

  add_common(app.add_subcommand("entropy", "Renyi entropy of one state"));
  add_common(app.add_subcommand("moment", "entropic moment W_q of one state"));
  add_common(app.add_subcommand("sum", "position-momentum entropy sum"));
  add_common(app.add_subcommand("check-uncertainty", "entropy sum vs uncertainty bound"));
  auto* verify = add_common(app.add_subcommand("verify", "exact-vs-oracle verification suite"));
  verify->add_flag("--inject-fault", spec.inject_fault,
                   "self-test: flip one c0 sign to force a located mismatch")
      ->group("");  // hidden
  add_common(app.add_subcommand("table", "sweep a state/order grid"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!n_text.empty()) spec.n_specs = split_commas(n_text);
    spec.alpha = parse_rational(alpha_text);
    if (spec.alpha <= 0) throw UsageError("--alpha must be positive");

    CLI::App* sub = app.get_subcommands().front();
    spec.command = sub->get_name();
    if (spec.command == "verify") {
      // Default grid: n <= 8, q in {2,3,4}, D <= 3.
      if (sub->count("--dim") == 0) spec.dim = 3;
      if (sub->count("--q") == 0 && !spec.conjecture) spec.q_text = "2,3,4";
    }
    if (spec.command == "entropy") return run_entropy(spec, out);
    if (spec.command == "moment") return run_moment(spec, out);
    if (spec.command == "sum") return run_sum(spec, out);
    if (spec.command == "check-uncertainty") return run_check_uncertainty(spec, out);
    if (spec.command == "verify") return run_verify(spec, out);
    if (spec.command == "table") return run_table(spec, out);
    err << "error: unknown command\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hrq::cli
