#pragma once

// Executable claim suite: one check per stated result, exact
// comparisons only, plus the exploratory volume probe for the i-th
// pyramidal family.

#include <map>
#include <string>
#include <vector>

#include "ivp/ehrhart.hpp"
#include "ivp/flow_dimension.hpp"

namespace ivp {

enum class Status { Pass, Fail, ConjectureConsistent, ConjectureViolated };

std::string to_string(Status s);

struct CheckResult {
  std::string claim_id;
  std::map<std::string, long> params;
  Status status = Status::Fail;
  std::string computed;
  std::string expected;
  double elapsed_ms = 0.0;
};

struct SuiteConfig {
  std::vector<std::pair<std::string, std::map<std::string, long>>> checks;
  unsigned long seed = 0;  // used by sampled checks (thm4.2 at n >= 7)
};

struct Report {
  std::vector<CheckResult> results;
  int passed = 0, failed = 0, conjecture_consistent = 0,
      conjecture_violated = 0;
  std::string environment;
  bool ok() const { return failed == 0; }
};

// Dispatch a single claim check. Unknown claim ids and out-of-bounds
// parameters throw std::invalid_argument naming the limit.
CheckResult verify_claim(const std::string& claim_id,
                         const std::map<std::string, long>& params,
                         unsigned long seed = 0);

SuiteConfig default_config();

Report verify_suite(const SuiteConfig& config);

// Conjectured volume 2^i (n - (i+1)) for the i-th pyramidal family over
// an inclusive n range, with a greedy placing-triangulation report.
std::vector<CheckResult> probe_conjecture(int i, int n_lo, int n_hi);

std::string report_json(const Report& r, bool include_timing = true);
std::string report_text(const Report& r);
std::string report_csv(const Report& r);

}  // namespace ivp
