#pragma once

#include <Eigen/Core>

#include "gaussbs/covariance.hpp"

namespace gaussbs {

// The 4x4 beam-splitter matrix U(theta, phi) acting on the ordering
// (alpha1*, alpha1, alpha2*, alpha2); unitary for every parameter choice.
Eigen::Matrix4cd unitary(const BeamSplitterParams& p);

// V_out = U^dag V_in U. Works for correlated inputs as well; the determinant
// is conserved.
TwoModeCovariance apply(const TwoModeCovariance& v_in, const BeamSplitterParams& p);

struct OutputBlocks {
  SingleModeCovariance mode_a;
  SingleModeCovariance mode_b;
  Eigen::Matrix2cd cross;
};

// Closed-form output blocks for a product input diag(V1, V2) — the arithmetic
// path that avoids the 4x4 matrix product. Identical to
// apply(tensor(V1, V2), p) up to rounding.
OutputBlocks output_blocks(const SingleModeCovariance& v1, const SingleModeCovariance& v2,
                           const BeamSplitterParams& p);

// Covariance of Tr2(rho) (x) Tr1(rho): keeps A and B, zeroes the cross block.
TwoModeCovariance partial_trace_product(const TwoModeCovariance& v);

// phi = arg(b)/2 - arg(d)/2, with arg(0) := 0. Under this choice the output
// minimum eigenvalues decompose as lambda~_1 = l1 cos^2 + l2 sin^2 (and the
// mirrored expression for lambda~_2), so their sum is conserved.
double phase_condition(Complex b, Complex d);

}  // namespace gaussbs
