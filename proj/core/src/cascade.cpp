#include "gaussbs/cascade.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gaussbs/beamsplitter.hpp"
#include "gaussbs/measures.hpp"

namespace gaussbs {

namespace {

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct LevelAccumulator {
  KahanSum tau;
  KahanSum lambda_min;
  KahanSum nonclassicality;
  KahanSum s_n;
  std::uint64_t nodes = 0;
};

struct TreeContext {
  int depth = 0;
  const AngleSchedule* schedule = nullptr;
  std::vector<LevelAccumulator> acc;
  std::vector<SingleModeCovariance>* leaves = nullptr;
};

// `w` is the depth deficit 1/2 - lambda_min, propagated multiplicatively
// (w -> w cos^2, w sin^2 under vacuum mixing, which is exact). Deep levels
// have w of order tau/2^level, far below the absolute rounding floor of the
// matrix route, so the level sums stay accurate at every depth.
void visit(const SingleModeCovariance& state, double w, int level, std::uint64_t index,
           TreeContext& ctx) {
  LevelAccumulator& here = ctx.acc[static_cast<std::size_t>(level)];
  here.nodes += 1;
  here.lambda_min.add(0.5 - w);
  here.tau.add(std::max(0.0, w));
  // -log2(2 lambda) = -log1p(-2w) log2(e)
  here.nonclassicality.add(-std::log1p(-2.0 * w) * std::numbers::log2e);
  if (level == ctx.depth) {
    if (ctx.leaves != nullptr) {
      ctx.leaves->push_back(state);
    }
    return;
  }
  const double theta = (*ctx.schedule)(level, index);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const BeamSplitterParams p(theta, phase_condition(state.b(), 0.0));
  const OutputBlocks out = output_blocks(state, SingleModeCovariance::vacuum(), p);
  // The eigenvalue ratio of one vacuum-mixing event reduces to
  // lambda~_1 lambda~_2 / (lambda/2) = 1 + 2 c^2 s^2 w^2 / lambda.
  const double ratio_minus_one = 2.0 * c2 * s2 * w * w / (0.5 - w);
  ctx.acc[static_cast<std::size_t>(level) + 1].s_n.add(std::log1p(ratio_minus_one) *
                                                       std::numbers::log2e);
  visit(out.mode_a, w * c2, level + 1, 2 * index, ctx);
  visit(out.mode_b, w * s2, level + 1, 2 * index + 1, ctx);
}

}  // namespace

DepletionRun depletion_run(const SingleModeCovariance& ncs, std::span<const double> thetas,
                           std::span<const double> phis) {
  if (thetas.empty() || thetas.size() != phis.size()) {
    throw std::invalid_argument("depletion_run needs matching, non-empty angle lists");
  }
  DepletionRun run;
  run.thetas.assign(thetas.begin(), thetas.end());
  run.phis.assign(phis.begin(), phis.end());
  run.stages.reserve(thetas.size());

  SingleModeCovariance in1 = ncs;
  SingleModeCovariance in2 = SingleModeCovariance::vacuum();
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const BeamSplitterParams p(thetas[i], phis[i]);
    const TwoModeCovariance v_in = tensor(in1, in2);
    const TwoModeCovariance v_out = apply(v_in, p);
    const TwoModeCovariance traced = partial_trace_product(v_out);
    DepletionStage stage{v_out.mode_a(), v_out.mode_b(), log_negativity(v_out),
                         two_mode_nonclassical_depth(traced), s_n(v_in, v_out)};
    in1 = stage.out1;
    in2 = stage.out2;
    run.stages.push_back(std::move(stage));
  }
  return run;
}

namespace schedules {

AngleSchedule constant(double theta) {
  return [theta](int, std::uint64_t) { return theta; };
}

AngleSchedule per_level(std::vector<double> thetas) {
  return [thetas = std::move(thetas)](int level, std::uint64_t) {
    return thetas.at(static_cast<std::size_t>(level));
  };
}

AngleSchedule seeded_random(std::uint64_t seed, double lo, double hi) {
  return [seed, lo, hi](int level, std::uint64_t index) {
    const std::uint64_t h =
        mix64(mix64(seed ^ (0x632be59bd9b4e019ULL * static_cast<std::uint64_t>(level + 1))) ^
              (index + 1));
    const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  };
}

}  // namespace schedules

CascadeTree split_tree(const SingleModeCovariance& ncs, int depth,
                       const AngleSchedule& angles) {
  if (depth < 1 || depth > kMaxTreeDepth) {
    throw std::invalid_argument("tree depth must lie in [1, 24]");
  }
  CascadeTree tree;
  tree.depth = depth;
  const double w0 = 0.5 - ncs.lambda_min();
  tree.input_tau = std::max(0.0, w0);
  tree.input_nonclassicality = -std::log1p(-2.0 * w0) * std::numbers::log2e;
  tree.leaves_retained = depth <= kLeafRetentionMaxDepth;

  TreeContext ctx;
  ctx.depth = depth;
  ctx.schedule = &angles;
  ctx.acc.resize(static_cast<std::size_t>(depth) + 1);
  if (tree.leaves_retained) {
    tree.leaves.reserve(std::uint64_t{1} << depth);
    ctx.leaves = &tree.leaves;
  }
  visit(ncs, 0.5 - ncs.lambda_min(), 0, 0, ctx);

  tree.levels.resize(static_cast<std::size_t>(depth) + 1);
  double cumulative = 0.0;
  for (int k = 0; k <= depth; ++k) {
    const LevelAccumulator& acc = ctx.acc[static_cast<std::size_t>(k)];
    TreeLevel& row = tree.levels[static_cast<std::size_t>(k)];
    row.level = k;
    row.nodes = acc.nodes;
    row.sum_tau = acc.tau.sum;
    row.sum_lambda_min = acc.lambda_min.sum;
    row.sum_nonclassicality = acc.nonclassicality.sum;
    row.level_s_n = acc.s_n.sum;
    cumulative += row.level_s_n;
    row.cumulative_s_n = cumulative;
    row.conservation_residual =
        std::abs(tree.input_nonclassicality - row.sum_nonclassicality - cumulative);
  }
  return tree;
}

LimitTotals limit_totals(const SingleModeCovariance& ncs) {
  const double lmin = ncs.lambda_min();
  LimitTotals totals;
  totals.n_tot = (1.0 - 2.0 * lmin) * std::numbers::log2e;
  totals.s_tot = -std::log2(2.0 * lmin) - totals.n_tot;
  return totals;
}

}  // namespace gaussbs
