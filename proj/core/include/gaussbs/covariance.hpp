#pragma once

#include <array>
#include <complex>
#include <utility>

#include <Eigen/Core>

#include "gaussbs/errors.hpp"

// Complex-amplitude covariance formalism for zero-mean Gaussian states.
//
// Conventions, used consistently across the library:
//   * symmetric operator ordering with vacuum variance 1/2;
//   * a single mode is V = [[a, b], [b*, a]] with a = <|alpha|^2>_sym (real)
//     and b = <alpha^2> (complex); its eigenvalues are a -+ |b|;
//   * two modes form the 4x4 Hermitian matrix [[A, C], [C^dag, B]] in the
//     ordering y^dag = (alpha1*, alpha1, alpha2*, alpha2);
//   * physicality of a mode is a^2 >= |b|^2 + 1/4, equality for pure states;
//   * the squeezing parameter r is the natural-log convention,
//     lambda_min = exp(-2r)/2.

namespace gaussbs {

using Complex = std::complex<double>;

// Tolerance used when enforcing the physicality inequality; constructions that
// land within it of the pure boundary are clamped onto the boundary.
inline constexpr double kPhysicalityTol = 1e-12;

// Slack allowed below the vacuum value 1/2 for symplectic eigenvalues when
// validating a two-mode matrix (absorbs eigensolver rounding).
inline constexpr double kSymplecticTol = 1e-9;

class SingleModeCovariance {
 public:
  // Enforces a > 0 and a^2 >= |b|^2 + 1/4 - kPhysicalityTol, clamping onto
  // the pure boundary when inside the tolerance band.
  SingleModeCovariance(double a, Complex b);

  static SingleModeCovariance vacuum() { return SingleModeCovariance(0.5, 0.0); }

  double a() const { return a_; }
  Complex b() const { return b_; }

  double lambda_min() const { return a_ - std::abs(b_); }
  double lambda_max() const { return a_ + std::abs(b_); }

  bool is_pure(double tol = 1e-9) const;

  Eigen::Matrix2cd matrix() const;

 private:
  double a_;
  Complex b_;
};

// (lambda_min, lambda_max) = (a - |b|, a + |b|).
std::pair<double, double> eigenvalues(const SingleModeCovariance& v);

// u = 1 / (2 sqrt(lambda_min lambda_max)); 1 exactly for pure states.
double purity(const SingleModeCovariance& v);

// Pure squeezed state, b real positive: a = cosh(2r)/2, b = sinh(2r)/2.
SingleModeCovariance squeezed_state(double r);

// Thermal state with mean photon number n: a = n + 1/2, b = 0.
SingleModeCovariance thermal_state(double n);

struct BeamSplitterParams {
  double theta = 0.0;  // mixing angle, transmittance cos^2(theta)
  double phi = 0.0;    // phase between reflected and transmitted fields

  // Requires theta in [0, pi/2]; phi is wrapped into (-pi, pi].
  BeamSplitterParams(double theta_in, double phi_in);
};

class TwoModeCovariance {
 public:
  // Assembles [[A, C], [C^dag, B]] and validates the cross-block structure
  // C = [[g, d], [d*, g*]] plus symplectic physicality.
  static TwoModeCovariance from_blocks(const SingleModeCovariance& mode_a,
                                       const SingleModeCovariance& mode_b,
                                       const Eigen::Matrix2cd& cross);

  // Validates Hermiticity, block structure, marginal and symplectic
  // physicality of an arbitrary 4x4 matrix.
  static TwoModeCovariance from_matrix(const Eigen::Matrix4cd& v);

  const Eigen::Matrix4cd& matrix() const { return v_; }

  SingleModeCovariance mode_a() const;
  SingleModeCovariance mode_b() const;
  Eigen::Matrix2cd cross_block() const { return v_.block<2, 2>(0, 2); }

  double determinant() const;

 private:
  explicit TwoModeCovariance(const Eigen::Matrix4cd& v) : v_(v) {}

  Eigen::Matrix4cd v_;
};

// V_in = diag(V1, V2): A = V1, B = V2, C = 0.
TwoModeCovariance tensor(const SingleModeCovariance& v1, const SingleModeCovariance& v2);

// Real-quadrature form in the ordering (x1, p1, x2, p2), vacuum = I/2.
// Per mode: sigma_xx = a + Re b, sigma_pp = a - Re b, sigma_xp = Im b; the
// cross block follows from the same per-mode basis change alpha = (x+ip)/sqrt2.
// The change of basis is unitary, so the determinant is preserved.
Eigen::Matrix4d to_real_quadrature(const TwoModeCovariance& v);

// Symplectic spectrum of a real-quadrature covariance: the two positive
// numbers {nu_1 <= nu_2} with eigenvalues of (i Omega sigma) equal to -+nu_k.
// Physical states have nu_k >= 1/2.
std::array<double, 2> symplectic_eigenvalues(const Eigen::Matrix4d& sigma);

}  // namespace gaussbs
