#pragma once

// Named verification suites.  Each suite runs a fixed list of exact checks
// and returns a report whose JSON form depends only on the configuration.

#include <string>
#include <vector>

#include "hallforge/json_io.hpp"

namespace hallforge {

struct RunConfig {
  std::string algebra = "kronecker-dup";
  std::vector<std::uint64_t> fields{2, 3};
  std::vector<std::uint64_t> points{2, 3, 5, 7, 9};
  std::vector<std::uint64_t> holdout{4, 8, 11};
  std::uint64_t seed = 0;
  std::uint64_t cap_submodules = kDefaultSubmoduleCap;
  std::uint64_t cap_cocycles = kDefaultCocycleCap;
  std::string format = "json";  // json | csv
  std::string suite;
  std::string out_dir;

  HallOptions hall_options() const;
  Json to_json() const;
  /// Missing keys keep their defaults; throws InvalidArgument on bad types.
  static RunConfig from_json(const Json& j);
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  Json data;
};

struct SuiteReport {
  std::string suite;
  RunConfig config;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, Json>> certificates;  // file name, content
  Json info;  // suite-specific results that are not pass/fail checks

  bool pass() const;
  const Check* first_failure() const;
  Json to_json() const;
  std::string to_csv() const;
};

/// thm3.1 thm3.3-identities ex5.7 lemma4.6 lemma5.1 lemma4.2 assoc lie-axioms,
/// plus loewy exceptional hallpoly.
std::vector<std::string> suite_names();
/// Runs cfg.suite.  Throws InvalidArgument for an unknown suite or an algebra
/// the suite does not apply to; CapExceeded and Undecided propagate.
SuiteReport run_suite(const RunConfig& cfg);

/// (x, y, m) triples with x, y indecomposable used by the polynomial suites.
std::vector<std::array<std::string, 3>> standard_triples(const std::string& algebra);

}  // namespace hallforge
