// Property suites: each function runs one acceptance criterion at its pinned
// scale and tolerance and reports the worst residual observed. The CLI
// `verify` command and the acceptance binary both drive these.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ktw/simulate.hpp"

namespace ktw {

struct SuiteResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // worst residual observed (suite-specific meaning)
  double tol = 0.0;    // the bound `worst` was compared against
  std::string detail;  // human-readable notes (sample counts, sub-checks)
};

// The eleven acceptance suites. `seed` drives all sampling; every sample uses
// a seed derived from (seed, suite, index), so results are order-independent.
SuiteResult suite_nilpotency(std::uint64_t seed);        // 1
SuiteResult suite_membership(std::uint64_t seed);        // 2
SuiteResult suite_equivariance(std::uint64_t seed);      // 3
SuiteResult suite_orbit_labels(std::uint64_t seed);      // 4
SuiteResult suite_regularization(std::uint64_t seed);    // 5
SuiteResult suite_ks_section(std::uint64_t seed);        // 6
SuiteResult suite_flow(std::uint64_t seed);              // 7
SuiteResult suite_lie_poisson(std::uint64_t seed);       // 8
SuiteResult suite_kepler_n2(std::uint64_t seed);         // 9
SuiteResult suite_integrable(std::uint64_t seed);        // 10
// cli_path empty: exercise the library writers; otherwise run the real binary
// twice and byte-compare its outputs.
SuiteResult suite_determinism(std::uint64_t seed, const std::string& cli_path);

std::vector<SuiteResult> run_all_suites(
    std::uint64_t seed, const std::map<std::string, double>& tol_overrides,
    const std::string& cli_path);

// Prints one line per suite, returns 0 iff all pass (1 otherwise).
int cmd_verify(const RunConfig& cfg);

}  // namespace ktw
