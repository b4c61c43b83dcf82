#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gaussbs {

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  double max_residual = 0.0;   // worst numeric residual observed
  std::size_t violations = 0;  // failed boolean checks (orderings, signs)
};

struct VerificationReport {
  std::vector<SuiteResult> suites;

  bool passed(double tol) const;
};

// Runs every randomized invariant suite with `cases` instances per suite.
// Deterministic for a fixed seed.
VerificationReport run_verification(std::uint64_t seed, std::size_t cases);

}  // namespace gaussbs
