#include "gaussbs/sampling.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace gaussbs {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix2d rotation(double angle) {
  Eigen::Matrix2d r;
  r << std::cos(angle), std::sin(angle), -std::sin(angle), std::cos(angle);
  return r;
}

Eigen::Matrix2d squeezer(double r) {
  Eigen::Matrix2d s = Eigen::Matrix2d::Zero();
  s(0, 0) = std::exp(r);
  s(1, 1) = std::exp(-r);
  return s;
}

// Euler-decomposed local symplectic on one mode.
Eigen::Matrix2d local_symplectic(double pre, double r, double post) {
  return rotation(pre) * squeezer(r) * rotation(post);
}

Eigen::Matrix4d beam_splitter_symplectic(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix4d b = Eigen::Matrix4d::Zero();
  b.block<2, 2>(0, 0) = c * Eigen::Matrix2d::Identity();
  b.block<2, 2>(2, 2) = c * Eigen::Matrix2d::Identity();
  b.block<2, 2>(0, 2) = s * Eigen::Matrix2d::Identity();
  b.block<2, 2>(2, 0) = -s * Eigen::Matrix2d::Identity();
  return b;
}

// (x1, p1) -> (alpha1, alpha1*) per mode, matching to_real_quadrature.
Eigen::Matrix4cd basis_change() {
  const double s = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd w;
  w << Complex(s, 0.0), Complex(0.0, s), Complex(s, 0.0), Complex(0.0, -s);
  Eigen::Matrix4cd full = Eigen::Matrix4cd::Zero();
  full.block<2, 2>(0, 0) = w;
  full.block<2, 2>(2, 2) = w;
  return full;
}

}  // namespace

Sampler::Sampler(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {
  next_raw();
  next_raw();
}

std::uint64_t Sampler::next_raw() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Sampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(next_raw() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

SingleModeCovariance Sampler::single_mode() {
  const double lmin = uniform(0.1, 1.2);
  const double floor = std::max(lmin, 1.0 / (4.0 * lmin));
  const double lmax = uniform(floor, floor + 1.0);
  const double a = (lmin + lmax) / 2.0;
  const double mag = (lmax - lmin) / 2.0;
  return SingleModeCovariance(a, std::polar(mag, uniform(-kPi, kPi)));
}

SingleModeCovariance Sampler::nonclassical(bool pure) {
  const double lmin = uniform(0.06, 0.45);
  const double floor = 1.0 / (4.0 * lmin);
  const double lmax = pure ? floor : uniform(floor, 2.0 * floor);
  const double a = (lmin + lmax) / 2.0;
  const double mag = (lmax - lmin) / 2.0;
  return SingleModeCovariance(a, std::polar(mag, uniform(-kPi, kPi)));
}

std::pair<SingleModeCovariance, SingleModeCovariance> Sampler::constrained_pair() {
  const double l1 = uniform(0.06, 0.45);
  const double l1max = 1.0 / (4.0 * l1);
  double l2 = 0.0;
  double l2max = 0.0;
  if (next_raw() % 2 == 0) {
    // l1 < l2 <= l2max < l1max
    l2 = uniform(l1 * 1.05, l1max * 0.95);
    const double floor = std::max(l2, 1.0 / (4.0 * l2));
    l2max = uniform(floor, floor + (l1max * 0.999 - floor) * 0.9);
  } else {
    // l2 < l1 and l1max < l2max
    l2 = uniform(0.02, l1 * 0.95);
    const double floor = std::max(l1max * 1.05, 1.0 / (4.0 * l2));
    l2max = uniform(floor, floor * 1.5);
  }
  const SingleModeCovariance v1((l1 + l1max) / 2.0,
                                std::polar((l1max - l1) / 2.0, uniform(-kPi, kPi)));
  const SingleModeCovariance v2((l2 + l2max) / 2.0,
                                std::polar((l2max - l2) / 2.0, uniform(-kPi, kPi)));
  return {v1, v2};
}

TwoModeCovariance Sampler::two_mode() {
  const double nu1 = uniform(0.5, 1.5);
  const double nu2 = uniform(0.5, 1.5);
  Eigen::Matrix4d s1 = Eigen::Matrix4d::Zero();
  s1.block<2, 2>(0, 0) =
      local_symplectic(uniform(-kPi, kPi), uniform(-0.8, 0.8), uniform(-kPi, kPi));
  s1.block<2, 2>(2, 2) =
      local_symplectic(uniform(-kPi, kPi), uniform(-0.8, 0.8), uniform(-kPi, kPi));
  Eigen::Matrix4d s2 = Eigen::Matrix4d::Zero();
  s2.block<2, 2>(0, 0) =
      local_symplectic(uniform(-kPi, kPi), uniform(-0.8, 0.8), uniform(-kPi, kPi));
  s2.block<2, 2>(2, 2) =
      local_symplectic(uniform(-kPi, kPi), uniform(-0.8, 0.8), uniform(-kPi, kPi));
  const Eigen::Matrix4d sym = s1 * beam_splitter_symplectic(uniform(0.0, kPi / 2.0)) * s2;

  Eigen::Vector4d diag(nu1, nu1, nu2, nu2);
  const Eigen::Matrix4d sigma = sym * diag.asDiagonal() * sym.transpose();
  const Eigen::Matrix4cd w = basis_change();
  return TwoModeCovariance::from_matrix(w * sigma * w.adjoint());
}

BeamSplitterParams Sampler::params() {
  return BeamSplitterParams(uniform(0.0, kPi / 2.0), uniform(-kPi, kPi));
}

double Sampler::theta() { return uniform(0.0, kPi / 2.0); }

}  // namespace gaussbs
