#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace cherednik::harness {

struct SelftestOptions {
  bool mutate = false;  // inject the Dunkl fault into every context
  std::size_t commutator_trials = 25;  // per (p, t, n) cell
};

struct SelftestStep {
  std::string name;
  bool passed = false;
  std::size_t checks = 0;
  std::string counterexample;
};

struct SelftestReport {
  std::vector<SelftestStep> steps;
  bool passed() const;
  /// First failing step's counterexample, empty when everything passed.
  std::string first_counterexample() const;
};

/// Commutator relations, recursive kernel vs Gram oracle, catalog
/// certification and cache versioning. Progress goes to `log`.
SelftestReport run_selftest(const SelftestOptions& opts, std::ostream& log);

}  // namespace cherednik::harness
