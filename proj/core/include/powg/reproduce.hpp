#pragma once

// Reproduction suites for the published numeric claims, one per claim group.

#include <cstdint>
#include <string>
#include <vector>

namespace powg::reproduce {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;

  bool ok() const;
};

struct Options {
  unsigned jobs = 1;
  std::uint64_t seed = 20240601;
  /// Also run the slow optional parts (k = 4 factorial sandwich, D_6).
  bool extended = false;
};

/// c1, c2, c2304, bprime, factorial, strategies, powerator, oracles, psi, axioms.
const std::vector<std::string>& suite_names();

/// Runs one suite, or all of them for "all". Throws PreconditionError for an
/// unknown name.
std::vector<SuiteResult> run(const std::string& suite, const Options& opts = {});

}  // namespace powg::reproduce
