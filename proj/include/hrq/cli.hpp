#pragma once

// Command-line front end: entropy, moment, sum, check-uncertainty, verify,
// table.  run_cli is the whole tool behind a thin main(), so tests can drive
// it in-process.  Exit codes: 0 success, 1 verification failure,
// 2 usage/precondition error.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hrq/rational.hpp"

namespace hrq::cli {

struct JobSpec {
  std::string command;
  unsigned long dim = 1;
  std::vector<std::string> n_specs;  // per-dimension "k" or "a..b"
  std::string q_text = "2";          // comma list of orders (or "0"/"inf")
  std::optional<std::string> qt_text;
  Rational alpha = Rational(1);
  std::string space = "pos";         // pos | mom | both
  std::string format = "human";      // human | csv | json
  unsigned digits = 30;
  std::string regime = "conjugated"; // conjugated | zpv
  bool conjecture = false;
  unsigned long long budget = 10000000ULL;
  bool inject_fault = false;         // verify self-test hook
};

int run_entropy(const JobSpec& spec, std::ostream& out);
int run_moment(const JobSpec& spec, std::ostream& out);
int run_sum(const JobSpec& spec, std::ostream& out);
int run_check_uncertainty(const JobSpec& spec, std::ostream& out);
int run_verify(const JobSpec& spec, std::ostream& out);
int run_table(const JobSpec& spec, std::ostream& out);

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hrq::cli
