#include "gaussbs/beamsplitter.hpp"

#include <cmath>
#include <complex>

namespace gaussbs {

Eigen::Matrix4cd unitary(const BeamSplitterParams& p) {
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  const Complex e = std::polar(1.0, p.phi);
  const Complex ec = std::conj(e);
  Eigen::Matrix4cd u;
  u << c, 0, -s * e, 0,  //
      0, c, 0, -s * ec,  //
      s * ec, 0, c, 0,   //
      0, s * e, 0, c;
  return u;
}

TwoModeCovariance apply(const TwoModeCovariance& v_in, const BeamSplitterParams& p) {
  const Eigen::Matrix4cd u = unitary(p);
  return TwoModeCovariance::from_matrix(u.adjoint() * v_in.matrix() * u);
}

OutputBlocks output_blocks(const SingleModeCovariance& v1, const SingleModeCovariance& v2,
                           const BeamSplitterParams& p) {
  const double a = v1.a();
  const Complex b = v1.b();
  const double c = v2.a();
  const Complex d = v2.b();
  const double c2 = std::cos(p.theta) * std::cos(p.theta);
  const double s2 = std::sin(p.theta) * std::sin(p.theta);
  const double sc = std::sin(p.theta) * std::cos(p.theta);
  const Complex e1 = std::polar(1.0, p.phi);
  const Complex e2 = std::polar(1.0, 2.0 * p.phi);

  const SingleModeCovariance mode_a(a * c2 + c * s2, b * c2 + d * s2 * e2);
  const SingleModeCovariance mode_b(a * s2 + c * c2, b * s2 * std::conj(e2) + d * c2);

  // Sign fixed by the U^dag V U product for the unitary above; the cross
  // block enters every derived quantity only through its determinant.
  Eigen::Matrix2cd cross;
  cross(0, 0) = sc * (c - a) * e1;
  cross(0, 1) = sc * (d * e1 - b * std::conj(e1));
  cross(1, 0) = std::conj(cross(0, 1));
  cross(1, 1) = std::conj(cross(0, 0));
  return {mode_a, mode_b, cross};
}

TwoModeCovariance partial_trace_product(const TwoModeCovariance& v) {
  return tensor(v.mode_a(), v.mode_b());
}

double phase_condition(Complex b, Complex d) {
  const double arg_b = (b == Complex(0.0)) ? 0.0 : std::arg(b);
  const double arg_d = (d == Complex(0.0)) ? 0.0 : std::arg(d);
  return arg_b / 2.0 - arg_d / 2.0;
}

}  // namespace gaussbs
