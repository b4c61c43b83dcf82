#include "gaussbs/covariance.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace gaussbs {

namespace {

// (x, p) -> (alpha, alpha*) for one mode, alpha = (x + ip)/sqrt(2).
Eigen::Matrix2cd mode_basis_change() {
  const double s = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd w;
  w << Complex(s, 0.0), Complex(0.0, s), Complex(s, 0.0), Complex(0.0, -s);
  return w;
}

Eigen::Matrix4cd two_mode_basis_change() {
  Eigen::Matrix4cd w = Eigen::Matrix4cd::Zero();
  w.block<2, 2>(0, 0) = mode_basis_change();
  w.block<2, 2>(2, 2) = mode_basis_change();
  return w;
}

void check_cross_structure(const Eigen::Matrix2cd& c, double scale) {
  const double tol = 1e-10 * (1.0 + scale);
  if (std::abs(c(1, 1) - std::conj(c(0, 0))) > tol ||
      std::abs(c(1, 0) - std::conj(c(0, 1))) > tol) {
    throw InvalidCovariance("cross block is not of the form [[g, d], [d*, g*]]");
  }
}

}  // namespace

SingleModeCovariance::SingleModeCovariance(double a, Complex b) : a_(a), b_(b) {
  if (!(a > 0.0)) {
    throw UnphysicalState("single-mode covariance requires a > 0");
  }
  const double slack = a_ * a_ - std::norm(b_) - 0.25;
  if (slack < -kPhysicalityTol) {
    std::ostringstream msg;
    msg << "unphysical single-mode covariance: a^2 - |b|^2 - 1/4 = " << slack;
    throw UnphysicalState(msg.str());
  }
  if (slack < 0.0) {
    // Land exactly on the pure boundary.
    const double b2 = a_ * a_ - 0.25;
    if (b2 > 0.0 && std::abs(b_) > 0.0) {
      b_ *= std::sqrt(b2) / std::abs(b_);
    } else {
      b_ = 0.0;
      a_ = std::max(a_, 0.5);
    }
  }
}

bool SingleModeCovariance::is_pure(double tol) const {
  return std::abs(a_ * a_ - std::norm(b_) - 0.25) <= tol;
}

Eigen::Matrix2cd SingleModeCovariance::matrix() const {
  Eigen::Matrix2cd m;
  m << Complex(a_, 0.0), b_, std::conj(b_), Complex(a_, 0.0);
  return m;
}

std::pair<double, double> eigenvalues(const SingleModeCovariance& v) {
  return {v.lambda_min(), v.lambda_max()};
}

double purity(const SingleModeCovariance& v) {
  return 1.0 / (2.0 * std::sqrt(v.lambda_min() * v.lambda_max()));
}

SingleModeCovariance squeezed_state(double r) {
  if (r < 0.0) {
    throw UnphysicalState("squeezing parameter must be non-negative");
  }
  return SingleModeCovariance(std::cosh(2.0 * r) / 2.0, std::sinh(2.0 * r) / 2.0);
}

SingleModeCovariance thermal_state(double n) {
  if (n < 0.0) {
    throw UnphysicalState("thermal photon number must be non-negative");
  }
  return SingleModeCovariance(n + 0.5, 0.0);
}

BeamSplitterParams::BeamSplitterParams(double theta_in, double phi_in)
    : theta(theta_in), phi(phi_in) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2.0)) {
    throw std::invalid_argument("beam-splitter angle must lie in [0, pi/2]");
  }
  phi = std::remainder(phi, 2.0 * std::numbers::pi);
  if (phi <= -std::numbers::pi) {
    phi += 2.0 * std::numbers::pi;
  }
}

TwoModeCovariance TwoModeCovariance::from_blocks(const SingleModeCovariance& mode_a,
                                                 const SingleModeCovariance& mode_b,
                                                 const Eigen::Matrix2cd& cross) {
  check_cross_structure(cross, cross.cwiseAbs().maxCoeff());
  Eigen::Matrix4cd v;
  v.block<2, 2>(0, 0) = mode_a.matrix();
  v.block<2, 2>(2, 2) = mode_b.matrix();
  v.block<2, 2>(0, 2) = cross;
  v.block<2, 2>(2, 0) = cross.adjoint();
  TwoModeCovariance out(v);
  const auto nus = symplectic_eigenvalues(to_real_quadrature(out));
  if (nus[0] < 0.5 - kSymplecticTol) {
    std::ostringstream msg;
    msg << "unphysical two-mode covariance: symplectic eigenvalue " << nus[0] << " < 1/2";
    throw UnphysicalState(msg.str());
  }
  return out;
}

TwoModeCovariance TwoModeCovariance::from_matrix(const Eigen::Matrix4cd& v) {
  const double scale = v.cwiseAbs().maxCoeff();
  if ((v - v.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + scale)) {
    throw InvalidCovariance("two-mode covariance matrix must be Hermitian");
  }
  const auto block = [&](int i, int j) { return v.block<2, 2>(i, j); };
  const double tol = 1e-10 * (1.0 + scale);
  for (int corner : {0, 2}) {
    const Eigen::Matrix2cd d = block(corner, corner);
    if (std::abs(d(0, 0).imag()) > tol || std::abs(d(0, 0) - d(1, 1)) > tol ||
        std::abs(d(1, 0) - std::conj(d(0, 1))) > tol) {
      throw InvalidCovariance("diagonal block is not of the form [[a, b], [b*, a]]");
    }
  }
  check_cross_structure(block(0, 2), scale);
  // Marginal physicality, then the full symplectic check.
  const SingleModeCovariance ma(v(0, 0).real(), v(0, 1));
  const SingleModeCovariance mb(v(2, 2).real(), v(2, 3));
  return from_blocks(ma, mb, block(0, 2));
}

SingleModeCovariance TwoModeCovariance::mode_a() const {
  return SingleModeCovariance(v_(0, 0).real(), v_(0, 1));
}

SingleModeCovariance TwoModeCovariance::mode_b() const {
  return SingleModeCovariance(v_(2, 2).real(), v_(2, 3));
}

double TwoModeCovariance::determinant() const { return v_.determinant().real(); }

TwoModeCovariance tensor(const SingleModeCovariance& v1, const SingleModeCovariance& v2) {
  return TwoModeCovariance::from_blocks(v1, v2, Eigen::Matrix2cd::Zero());
}

Eigen::Matrix4d to_real_quadrature(const TwoModeCovariance& v) {
  const Eigen::Matrix4cd w = two_mode_basis_change();
  const Eigen::Matrix4cd sigma = w.adjoint() * v.matrix() * w;
  // Structure validation at construction guarantees a real result; the
  // residual imaginary part is rounding noise.
  Eigen::Matrix4d out = sigma.real();
  return (out + out.transpose()) / 2.0;
}

std::array<double, 2> symplectic_eigenvalues(const Eigen::Matrix4d& sigma) {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;
  const Eigen::EigenSolver<Eigen::Matrix4d> solver(omega * sigma, false);
  Eigen::Array4d mags = solver.eigenvalues().array().imag().abs();
  std::sort(mags.data(), mags.data() + 4);
  // Eigenvalues come in -+ i nu pairs.
  return {mags[0], mags[2]};
}

}  // namespace gaussbs
