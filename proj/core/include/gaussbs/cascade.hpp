#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gaussbs/covariance.hpp"

namespace gaussbs {

// ---------------------------------------------------------------------------
// Serial depletion: stage 1 mixes the input with a vacuum; every later stage
// mixes the two traced outputs of the previous stage with each other.
// ---------------------------------------------------------------------------

struct DepletionStage {
  SingleModeCovariance out1;  // traced output of mode 1 after this stage
  SingleModeCovariance out2;  // traced output of mode 2 after this stage
  double e_n = 0.0;           // negativity extracted by this stage
  double tau_product = 0.0;   // two-mode depth of the traced product state
  double s_n = 0.0;           // per-stage S_N
};

struct DepletionRun {
  std::vector<double> thetas;
  std::vector<double> phis;
  std::vector<DepletionStage> stages;
};

// Requires thetas.size() == phis.size() >= 1.
DepletionRun depletion_run(const SingleModeCovariance& ncs, std::span<const double> thetas,
                           std::span<const double> phis);

// ---------------------------------------------------------------------------
// Binary vacuum-splitting tree: every node is mixed with a fresh vacuum and
// both outputs become children. Level k holds 2^k states; per-level sums of
// the nonclassical depth are conserved, and the initial nonclassicality
// equals the level sum plus all S_N accumulated so far.
// ---------------------------------------------------------------------------

// theta for the splitter under node `index` (0-based within `level`).
using AngleSchedule = std::function<double(int level, std::uint64_t index)>;

namespace schedules {

AngleSchedule constant(double theta);
AngleSchedule per_level(std::vector<double> thetas);
// Deterministic per-node angles, uniform on [lo, hi]; default range keeps
// transmittance between ~15% and ~85%.
AngleSchedule seeded_random(std::uint64_t seed, double lo = 0.39269908169872414,
                            double hi = 1.1780972450961724);

}  // namespace schedules

struct TreeLevel {
  int level = 0;
  std::uint64_t nodes = 0;
  double sum_tau = 0.0;
  double sum_lambda_min = 0.0;
  double sum_nonclassicality = 0.0;
  double level_s_n = 0.0;  // S_N summed over the events producing this level
  double cumulative_s_n = 0.0;
  double conservation_residual = 0.0;  // |N_0 - sum_N - cumulative S_N|
};

struct CascadeTree {
  int depth = 0;
  double input_tau = 0.0;
  double input_nonclassicality = 0.0;
  std::vector<TreeLevel> levels;             // depth + 1 entries, level 0 = input
  std::vector<SingleModeCovariance> leaves;  // empty when not retained
  bool leaves_retained = false;
};

inline constexpr int kMaxTreeDepth = 24;
// Beyond this depth only the streamed per-level sums are kept.
inline constexpr int kLeafRetentionMaxDepth = 20;

// Requires 1 <= depth <= kMaxTreeDepth; the schedule must be defined for
// levels 0 .. depth-1. Phases follow the phase condition per node.
CascadeTree split_tree(const SingleModeCovariance& ncs, int depth,
                       const AngleSchedule& angles);

struct LimitTotals {
  double n_tot = 0.0;  // (1 - 2 lambda_min) log2 e
  double s_tot = 0.0;  // -log2(2 lambda_min) - n_tot
};

// Infinite-cascade totals; n_tot + s_tot equals the input nonclassicality by
// construction.
LimitTotals limit_totals(const SingleModeCovariance& ncs);

}  // namespace gaussbs
