#include "gaussbs/measures.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace gaussbs {

namespace {

double block_lambda_min(const Eigen::Matrix4cd& v, int corner) {
  return v(corner, corner).real() - std::abs(v(corner, corner + 1));
}

}  // namespace

double nonclassical_depth(const SingleModeCovariance& v) {
  return std::max(0.0, 0.5 - v.lambda_min());
}

double nonclassicality(const SingleModeCovariance& v) {
  return -std::log2(2.0 * v.lambda_min());
}

double two_mode_nonclassical_depth(const TwoModeCovariance& v) {
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(v.matrix(),
                                                               Eigen::EigenvaluesOnly);
  return std::max(0.0, 0.5 - solver.eigenvalues().minCoeff());
}

double s_quantity(const TwoModeCovariance& v) {
  const Eigen::Matrix4cd& m = v.matrix();
  const double det_a = m.block<2, 2>(0, 0).determinant().real();
  const double det_b = m.block<2, 2>(2, 2).determinant().real();
  const double det_c = m.block<2, 2>(0, 2).determinant().real();
  return 2.0 * (det_a + det_b - 2.0 * det_c);
}

double log_negativity_from_scalars(double s, double det) {
  double radicand = s * s - 16.0 * det;
  if (radicand < -1e-9) {
    std::ostringstream msg;
    msg << "negative radicand " << radicand << " in the negativity formula";
    throw InvalidCovariance(msg.str());
  }
  radicand = std::max(radicand, 0.0);
  const double arg = s - std::sqrt(radicand);
  if (!(arg > 0.0)) {
    throw InvalidCovariance("non-positive argument in the negativity logarithm");
  }
  return std::max(0.0, -0.5 * std::log2(arg));
}

double log_negativity(const TwoModeCovariance& v) {
  return log_negativity_from_scalars(s_quantity(v), v.determinant());
}

double oracle_log_negativity(const TwoModeCovariance& v) {
  Eigen::Matrix4d sigma = to_real_quadrature(v);
  // Partial transposition of mode 2 flips the sign of p2.
  for (int i = 0; i < 4; ++i) {
    sigma(3, i) = -sigma(3, i);
    sigma(i, 3) = -sigma(i, 3);
  }
  const double nu = symplectic_eigenvalues(sigma)[0];
  return std::max(0.0, -std::log2(2.0 * nu));
}

double s_n(const TwoModeCovariance& v_in, const TwoModeCovariance& v_out) {
  const double l1 = block_lambda_min(v_in.matrix(), 0);
  const double l2 = block_lambda_min(v_in.matrix(), 2);
  const double l1_out = block_lambda_min(v_out.matrix(), 0);
  const double l2_out = block_lambda_min(v_out.matrix(), 2);
  if (l1 <= 0.0 || l2 <= 0.0 || l1_out <= 0.0 || l2_out <= 0.0) {
    throw DegenerateEigenvalue("minimum eigenvalue must be positive");
  }
  return std::log2((l1_out * l2_out) / (l1 * l2));
}

double s_n_from_minima(double lambda1_min, double lambda2_min, double theta) {
  if (lambda1_min <= 0.0 || lambda2_min <= 0.0) {
    throw DegenerateEigenvalue("minimum eigenvalue must be positive");
  }
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double l1_out = lambda1_min * c2 + lambda2_min * s2;
  const double l2_out = lambda1_min * s2 + lambda2_min * c2;
  return std::log2((l1_out * l2_out) / (lambda1_min * lambda2_min));
}

double c_constant(const SingleModeCovariance& v1, const SingleModeCovariance& v2) {
  const double l1 = v1.lambda_min();
  const double l2 = v2.lambda_min();
  if (std::abs(l2 - l1) <= 1e-12 * std::max({1.0, l1, l2})) {
    throw DegenerateCase("C is undefined for equal minimum eigenvalues");
  }
  return 8.0 * l1 * l2 * (v1.lambda_max() - v2.lambda_max()) / (l2 - l1);
}

double identity_residual(const SingleModeCovariance& v1, const SingleModeCovariance& v2,
                         const BeamSplitterParams& p) {
  const TwoModeCovariance v_out = apply(tensor(v1, v2), p);
  const double lhs = s_quantity(v_out) - (0.5 + 8.0 * v_out.determinant());
  const double ratio = (block_lambda_min(v_out.matrix(), 0) *
                        block_lambda_min(v_out.matrix(), 2)) /
                       (v1.lambda_min() * v2.lambda_min());
  const double rhs = c_constant(v1, v2) * (ratio - 1.0);
  return std::abs(lhs - rhs);
}

bool entanglement_condition(const TwoModeCovariance& v) {
  return s_quantity(v) > 0.5 + 8.0 * v.determinant();
}

MeasureReport report(const SingleModeCovariance& v1, const SingleModeCovariance& v2,
                     const BeamSplitterParams& p) {
  const TwoModeCovariance v_in = tensor(v1, v2);
  const TwoModeCovariance v_out = apply(v_in, p);
  const SingleModeCovariance out1 = v_out.mode_a();
  const SingleModeCovariance out2 = v_out.mode_b();

  MeasureReport r;
  r.tau1 = nonclassical_depth(v1);
  r.tau2 = nonclassical_depth(v2);
  r.tau1_out = nonclassical_depth(out1);
  r.tau2_out = nonclassical_depth(out2);
  r.n_in = nonclassicality(v1) + nonclassicality(v2);
  r.n_out = nonclassicality(out1) + nonclassicality(out2);
  r.s_n = s_n(v_in, v_out);
  r.e_n = log_negativity(v_out);
  r.s_quantity = gaussbs::s_quantity(v_out);
  try {
    r.c_constant = c_constant(v1, v2);
  } catch (const DegenerateCase&) {
  }
  if (r.c_constant && (v1.is_pure() || v2.is_pure())) {
    const double lhs = r.s_quantity - (0.5 + 8.0 * v_out.determinant());
    const double ratio =
        (out1.lambda_min() * out2.lambda_min()) / (v1.lambda_min() * v2.lambda_min());
    r.identity_residual = std::abs(lhs - *r.c_constant * (ratio - 1.0));
  }
  r.residual_conservation = std::abs(r.n_in - r.n_out - r.s_n);
  return r;
}

}  // namespace gaussbs
