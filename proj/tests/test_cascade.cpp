#include "gaussbs/cascade.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "gaussbs/beamsplitter.hpp"
#include "gaussbs/measures.hpp"
#include "gaussbs/sampling.hpp"

using namespace gaussbs;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2E = 0.7213475204444817;  // 0.5 log2(e)

SingleModeCovariance pure_state(double lambda_min) {
  const double lambda_max = 1.0 / (4.0 * lambda_min);
  return SingleModeCovariance((lambda_min + lambda_max) / 2.0,
                              (lambda_max - lambda_min) / 2.0);
}

}  // namespace

TEST(depletion, rejects_bad_schedules) {
  const SingleModeCovariance ncs = pure_state(0.3);
  EXPECT_THROW(depletion_run(ncs, {}, {}), std::invalid_argument);
  const double thetas[2] = {0.1, 0.2};
  const double phis[1] = {0.0};
  EXPECT_THROW(depletion_run(ncs, thetas, phis), std::invalid_argument);
}

TEST(depletion, zero_angles_do_nothing) {
  const SingleModeCovariance ncs = pure_state(0.335);
  const std::vector<double> thetas(3, 0.0);
  const std::vector<double> phis(3, 0.0);
  const DepletionRun run = depletion_run(ncs, thetas, phis);
  ASSERT_EQ(run.stages.size(), 3u);
  for (const DepletionStage& stage : run.stages) {
    EXPECT_EQ(stage.e_n, 0.0);
    EXPECT_NEAR(stage.tau_product, 0.165, 1e-12);
    EXPECT_NEAR(stage.out1.lambda_min(), 0.335, 1e-14);
    EXPECT_NEAR(stage.out2.lambda_min(), 0.5, 1e-14);
  }
}

TEST(depletion, balanced_first_stage_starves_the_second) {
  Sampler rng(61);
  for (int i = 0; i < 25; ++i) {
    const SingleModeCovariance ncs = rng.nonclassical(true);
    const double phi1 = phase_condition(ncs.b(), 0.0);
    const OutputBlocks stage1 = output_blocks(ncs, SingleModeCovariance::vacuum(),
                                              BeamSplitterParams(kPi / 4.0, phi1));
    const double phi2 = phase_condition(stage1.mode_a.b(), stage1.mode_b.b());
    const double thetas[2] = {kPi / 4.0, rng.theta()};
    const double phis[2] = {phi1, phi2};
    const DepletionRun run = depletion_run(ncs, thetas, phis);
    EXPECT_GT(run.stages[0].e_n, 0.0);
    EXPECT_LT(run.stages[1].e_n, 1e-12);
  }
}

TEST(depletion, generic_schedule_extracts_less_per_stage) {
  const std::vector<double> thetas(4, kPi / 5.0);
  const std::vector<double> phis(4, 0.0);
  const DepletionRun run = depletion_run(pure_state(0.335), thetas, phis);
  ASSERT_EQ(run.stages.size(), 4u);
  double prev_en = std::numeric_limits<double>::infinity();
  double prev_tau = std::numeric_limits<double>::infinity();
  for (const DepletionStage& stage : run.stages) {
    EXPECT_GE(stage.e_n, 0.0);
    EXPECT_LE(stage.e_n, prev_en + 1e-15);
    EXPECT_LE(stage.tau_product, prev_tau + 1e-15);
    prev_en = stage.e_n;
    prev_tau = stage.tau_product;
  }
}

TEST(split_tree, validates_arguments) {
  const SingleModeCovariance ncs = pure_state(0.25);
  EXPECT_THROW(split_tree(ncs, 0, schedules::constant(0.3)), std::invalid_argument);
  EXPECT_THROW(split_tree(ncs, 25, schedules::constant(0.3)), std::invalid_argument);
  EXPECT_THROW(split_tree(ncs, 3, schedules::per_level({0.1, 0.2})), std::out_of_range);
}

TEST(split_tree, balanced_depth_one_halves_the_depth) {
  const CascadeTree tree = split_tree(pure_state(0.25), 1, schedules::constant(kPi / 4.0));
  ASSERT_EQ(tree.levels.size(), 2u);
  EXPECT_EQ(tree.levels[1].nodes, 2u);
  ASSERT_TRUE(tree.leaves_retained);
  ASSERT_EQ(tree.leaves.size(), 2u);
  for (const SingleModeCovariance& leaf : tree.leaves) {
    EXPECT_NEAR(0.5 - leaf.lambda_min(), 0.125, 1e-14);
  }
  EXPECT_NEAR(tree.levels[1].sum_tau, 0.25, 1e-14);
}

TEST(split_tree, zero_angles_copy_down_the_spine) {
  const SingleModeCovariance ncs = pure_state(0.3);
  const CascadeTree tree = split_tree(ncs, 4, schedules::constant(0.0));
  ASSERT_EQ(tree.leaves.size(), 16u);
  // One leaf carries the input, the rest are vacua.
  int carriers = 0;
  for (const SingleModeCovariance& leaf : tree.leaves) {
    if (std::abs(leaf.lambda_min() - 0.3) < 1e-12) {
      ++carriers;
    } else {
      EXPECT_NEAR(leaf.lambda_min(), 0.5, 1e-14);
    }
  }
  EXPECT_EQ(carriers, 1);
  for (const TreeLevel& level : tree.levels) {
    EXPECT_EQ(level.level_s_n, 0.0);
    EXPECT_EQ(level.cumulative_s_n, 0.0);
    EXPECT_LT(level.conservation_residual, 1e-14);
  }
}

TEST(split_tree, per_level_sums_are_conserved_for_random_schedules) {
  Sampler rng(67);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const SingleModeCovariance ncs = rng.nonclassical(true);
    const double tau0 = nonclassical_depth(ncs);
    const double n0 = nonclassicality(ncs);
    const CascadeTree tree = split_tree(ncs, 12, schedules::seeded_random(seed));
    ASSERT_EQ(tree.levels.size(), 13u);
    for (const TreeLevel& level : tree.levels) {
      EXPECT_EQ(level.nodes, std::uint64_t{1} << level.level);
      EXPECT_NEAR(level.sum_tau, tau0, 1e-12);
      EXPECT_NEAR(level.sum_nonclassicality + level.cumulative_s_n, n0, 1e-10);
    }
  }
}

TEST(split_tree, conservation_composition_holds_at_depth_twenty) {
  const SingleModeCovariance ncs = pure_state(0.25);
  for (const AngleSchedule& schedule :
       {schedules::constant(kPi / 4.0), schedules::seeded_random(7)}) {
    const CascadeTree tree = split_tree(ncs, 20, schedule);
    for (const TreeLevel& level : tree.levels) {
      EXPECT_LT(level.conservation_residual, 1e-10);
      EXPECT_NEAR(level.sum_tau, 0.25, 1e-12);
    }
  }
}

TEST(split_tree, deterministic_for_a_fixed_seed) {
  const SingleModeCovariance ncs = pure_state(0.25);
  const CascadeTree a = split_tree(ncs, 8, schedules::seeded_random(99));
  const CascadeTree b = split_tree(ncs, 8, schedules::seeded_random(99));
  for (std::size_t k = 0; k < a.levels.size(); ++k) {
    EXPECT_EQ(a.levels[k].sum_nonclassicality, b.levels[k].sum_nonclassicality);
    EXPECT_EQ(a.levels[k].cumulative_s_n, b.levels[k].cumulative_s_n);
  }
}

TEST(split_tree, balanced_totals_converge_at_the_documented_rate) {
  const SingleModeCovariance ncs = pure_state(0.25);
  const LimitTotals limits = limit_totals(ncs);
  const double tau0 = 0.25;
  double prev = std::numeric_limits<double>::infinity();
  for (int depth = 1; depth <= 16; ++depth) {
    const CascadeTree tree = split_tree(ncs, depth, schedules::constant(kPi / 4.0));
    const double err = std::abs(tree.levels.back().sum_nonclassicality - limits.n_tot);
    EXPECT_LT(err, 3.0 * std::numbers::log2e * tau0 * tau0 / std::pow(2.0, depth));
    EXPECT_LT(err, prev);
    prev = err;
  }
}

TEST(limit_totals, closed_form) {
  const LimitTotals at_boundary = limit_totals(SingleModeCovariance::vacuum());
  EXPECT_EQ(at_boundary.n_tot, 0.0);
  EXPECT_EQ(at_boundary.s_tot, 0.0);

  const SingleModeCovariance ncs = pure_state(0.25);
  const LimitTotals limits = limit_totals(ncs);
  EXPECT_NEAR(limits.n_tot, kHalfLog2E, 1e-15);
  EXPECT_NEAR(limits.s_tot, 1.0 - kHalfLog2E, 1e-15);
  EXPECT_DOUBLE_EQ(limits.n_tot + limits.s_tot, nonclassicality(ncs));
}

TEST(limit_totals, splits_every_input_nonclassicality) {
  Sampler rng(71);
  for (int i = 0; i < 100; ++i) {
    const SingleModeCovariance ncs = rng.nonclassical(rng.uniform(0.0, 1.0) < 0.5);
    const LimitTotals limits = limit_totals(ncs);
    EXPECT_NEAR(limits.n_tot + limits.s_tot, nonclassicality(ncs), 1e-15);
    EXPECT_GE(limits.n_tot, 0.0);
    EXPECT_GE(limits.s_tot, 0.0);
  }
}
