#include "gaussbs/beamsplitter.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/LU>

#include "gtest/gtest.h"

#include "gaussbs/sampling.hpp"

using namespace gaussbs;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(unitary, identity_at_zero_angle) {
  EXPECT_TRUE(unitary(BeamSplitterParams(0.0, 0.7))
                  .isApprox(Eigen::Matrix4cd::Identity(), 1e-15));
}

TEST(unitary, full_reflection_swaps_blocks_with_signs) {
  const Eigen::Matrix4cd u = unitary(BeamSplitterParams(kPi / 2.0, 0.0));
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(0, 2) = -1.0;
  expected(1, 3) = -1.0;
  expected(2, 0) = 1.0;
  expected(3, 1) = 1.0;
  EXPECT_LT((u - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(unitary, unitary_for_all_parameters) {
  Sampler rng(3);
  for (int i = 0; i < 200; ++i) {
    const Eigen::Matrix4cd u = unitary(rng.params());
    EXPECT_LT((u.adjoint() * u - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff(),
              1e-14);
  }
}

TEST(apply, vacuum_inputs_are_invariant) {
  const TwoModeCovariance vac = tensor(SingleModeCovariance::vacuum(),
                                       SingleModeCovariance::vacuum());
  Sampler rng(5);
  for (int i = 0; i < 50; ++i) {
    const TwoModeCovariance out = apply(vac, rng.params());
    EXPECT_LT((out.matrix() - vac.matrix()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(apply, balanced_splitter_on_squeezed_and_vacuum) {
  // Pure state with lambda_min = 1/4 mixed with a vacuum at theta = pi/4:
  // both output modes are (a, b) = (0.5625, 0.1875), eigenvalues
  // (0.375, 0.75), and the modes are correlated.
  const SingleModeCovariance ncs(0.625, 0.375);
  const TwoModeCovariance out =
      apply(tensor(ncs, SingleModeCovariance::vacuum()), BeamSplitterParams(kPi / 4.0, 0.0));
  const SingleModeCovariance a = out.mode_a();
  const SingleModeCovariance b = out.mode_b();
  EXPECT_NEAR(a.a(), 0.5625, 1e-15);
  EXPECT_NEAR(std::abs(a.b()), 0.1875, 1e-15);
  EXPECT_LT((a.matrix() - b.matrix()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(a.lambda_min(), 0.375, 1e-15);
  EXPECT_NEAR(a.lambda_max(), 0.75, 1e-15);
  EXPECT_GT(out.cross_block().cwiseAbs().maxCoeff(), 0.01);
}

TEST(apply, off_diagonal_entry_is_linear_for_real_inputs) {
  // With b, d real and phi = 0 the A-block off-diagonal is b cos^2 + d sin^2.
  const SingleModeCovariance v1(0.9, 0.35);
  const SingleModeCovariance v2(0.8, 0.2);
  const double theta = 0.6;
  const TwoModeCovariance out = apply(tensor(v1, v2), BeamSplitterParams(theta, 0.0));
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  EXPECT_NEAR(out.matrix()(0, 1).real(), 0.35 * c2 + 0.2 * s2, 1e-14);
  EXPECT_NEAR(out.matrix()(0, 1).imag(), 0.0, 1e-15);
}

TEST(apply, determinant_is_conserved) {
  Sampler rng(7);
  for (int i = 0; i < 300; ++i) {
    const TwoModeCovariance v = tensor(rng.single_mode(), rng.single_mode());
    EXPECT_NEAR(apply(v, rng.params()).determinant(), v.determinant(), 1e-12);
  }
}

TEST(apply, composes_like_the_unitary_product) {
  Sampler rng(9);
  for (int i = 0; i < 100; ++i) {
    const TwoModeCovariance v = tensor(rng.single_mode(), rng.single_mode());
    const BeamSplitterParams p1 = rng.params();
    const BeamSplitterParams p2 = rng.params();
    const Eigen::Matrix4cd combined = unitary(p1) * unitary(p2);
    const Eigen::Matrix4cd direct = combined.adjoint() * v.matrix() * combined;
    EXPECT_LT((apply(apply(v, p1), p2).matrix() - direct).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(output_blocks, trivial_angles) {
  const SingleModeCovariance v1(0.7, Complex(0.2, 0.3));
  const SingleModeCovariance v2(1.1, Complex(-0.4, 0.1));
  const double phi = 0.9;

  const OutputBlocks at_zero = output_blocks(v1, v2, BeamSplitterParams(0.0, phi));
  EXPECT_LT((at_zero.mode_a.matrix() - v1.matrix()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((at_zero.mode_b.matrix() - v2.matrix()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(at_zero.cross.cwiseAbs().maxCoeff(), 1e-15);

  // Full reflection exchanges the modes up to the 2 phi phase on b and d.
  const OutputBlocks swapped = output_blocks(v1, v2, BeamSplitterParams(kPi / 2.0, phi));
  EXPECT_NEAR(swapped.mode_a.a(), v2.a(), 1e-15);
  EXPECT_NEAR(swapped.mode_b.a(), v1.a(), 1e-15);
  const Complex e2(std::polar(1.0, 2.0 * phi));
  EXPECT_LT(std::abs(swapped.mode_a.b() - v2.b() * e2), 1e-15);
  EXPECT_LT(std::abs(swapped.mode_b.b() - v1.b() * std::conj(e2)), 1e-15);
  EXPECT_LT(swapped.cross.cwiseAbs().maxCoeff(), 1e-15);
}

TEST(output_blocks, cross_block_determinant_at_balanced_angle) {
  const SingleModeCovariance v1(0.82, Complex(0.31, -0.42));
  const OutputBlocks out =
      output_blocks(v1, SingleModeCovariance::vacuum(), BeamSplitterParams(kPi / 4.0, 0.0));
  const double expected = ((v1.a() - 0.5) * (v1.a() - 0.5) - std::norm(v1.b())) / 4.0;
  EXPECT_NEAR(out.cross.determinant().real(), expected, 1e-14);
  EXPECT_NEAR(out.cross.determinant().imag(), 0.0, 1e-15);
}

TEST(output_blocks, matches_the_matrix_product_everywhere) {
  Sampler rng(13);
  for (int i = 0; i < 500; ++i) {
    const SingleModeCovariance v1 = rng.single_mode();
    const SingleModeCovariance v2 = rng.single_mode();
    const BeamSplitterParams p = rng.params();
    const OutputBlocks closed = output_blocks(v1, v2, p);
    const Eigen::Matrix4cd product = apply(tensor(v1, v2), p).matrix();
    EXPECT_LT((closed.mode_a.matrix() - product.block<2, 2>(0, 0)).cwiseAbs().maxCoeff(),
              1e-12);
    EXPECT_LT((closed.mode_b.matrix() - product.block<2, 2>(2, 2)).cwiseAbs().maxCoeff(),
              1e-12);
    EXPECT_LT((closed.cross - product.block<2, 2>(0, 2)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(partial_trace_product, keeps_marginals_and_drops_correlations) {
  const TwoModeCovariance block_diag = tensor(squeezed_state(0.4), thermal_state(0.3));
  const TwoModeCovariance same = partial_trace_product(block_diag);
  EXPECT_LT((same.matrix() - block_diag.matrix()).cwiseAbs().maxCoeff(), 1e-15);

  Sampler rng(15);
  for (int i = 0; i < 100; ++i) {
    const TwoModeCovariance out = apply(tensor(rng.single_mode(), rng.single_mode()),
                                        rng.params());
    const TwoModeCovariance traced = partial_trace_product(out);
    EXPECT_LT((traced.matrix().block<2, 2>(0, 0) - out.matrix().block<2, 2>(0, 0))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-15);
    EXPECT_LT((traced.matrix().block<2, 2>(2, 2) - out.matrix().block<2, 2>(2, 2))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-15);
    EXPECT_EQ(traced.cross_block().cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(phase_condition, convention) {
  EXPECT_EQ(phase_condition(Complex(0.3, 0.0), Complex(0.2, 0.0)), 0.0);
  EXPECT_NEAR(phase_condition(Complex(0.0, 0.4), Complex(0.2, 0.0)), kPi / 4.0, 1e-15);
  EXPECT_EQ(phase_condition(Complex(0.0, 0.0), Complex(0.5, 0.0)), 0.0);
  const Complex b = std::polar(0.3, 1.1);
  EXPECT_NEAR(phase_condition(b, Complex(0.0, 0.0)), 0.55, 1e-15);
}

TEST(phase_condition, conserves_minimum_eigenvalue_sum) {
  Sampler rng(17);
  for (int i = 0; i < 500; ++i) {
    const SingleModeCovariance v1 = rng.single_mode();
    const SingleModeCovariance v2 = rng.single_mode();
    const double theta = rng.theta();
    const BeamSplitterParams p(theta, phase_condition(v1.b(), v2.b()));
    const OutputBlocks out = output_blocks(v1, v2, p);
    EXPECT_NEAR(out.mode_a.lambda_min() + out.mode_b.lambda_min(),
                v1.lambda_min() + v2.lambda_min(), 1e-12);
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    EXPECT_NEAR(out.mode_a.lambda_min(), v1.lambda_min() * c2 + v2.lambda_min() * s2,
                1e-12);
    EXPECT_NEAR(out.mode_b.lambda_min(), v1.lambda_min() * s2 + v2.lambda_min() * c2,
                1e-12);
  }
}
