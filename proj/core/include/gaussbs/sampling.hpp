#pragma once

#include <cstdint>
#include <utility>

#include "gaussbs/covariance.hpp"

namespace gaussbs {

// Deterministic generator for the randomized verification suites. Draws are
// produced directly from the raw engine output, so sequences are identical
// across platforms and standard-library versions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed);

  double uniform(double lo, double hi);

  // Generic mixed state: lambda_min in [0.1, 1.2], bounded lambda_max,
  // uniformly random b phase.
  SingleModeCovariance single_mode();

  // Nonclassical state with lambda_min in [0.06, 0.45]; pure ones sit exactly
  // on the boundary lambda_max = 1/(4 lambda_min).
  SingleModeCovariance nonclassical(bool pure);

  // Pair satisfying the constraints under which S_N and E_N share their sign:
  // the first state is pure, and the eigenvalue intervals are strictly nested
  // one way or the other.
  std::pair<SingleModeCovariance, SingleModeCovariance> constrained_pair();

  // Generic physical two-mode covariance built from a random symplectic
  // transform of a two-mode thermal state; the cross block is nonzero and not
  // restricted to beam-splitter form.
  TwoModeCovariance two_mode();

  BeamSplitterParams params();

  // Mixing angle only, uniform over [0, pi/2].
  double theta();

 private:
  std::uint64_t next_raw();

  std::uint64_t state_;
};

}  // namespace gaussbs
