#pragma once

#include <optional>

#include "gaussbs/beamsplitter.hpp"
#include "gaussbs/covariance.hpp"

namespace gaussbs {

// tau = max{0, 1/2 - lambda_min}; in [0, 1/2) for Gaussian states.
double nonclassical_depth(const SingleModeCovariance& v);

// N = -log2(2 lambda_min), in bits; negative for anti-squeezed states.
double nonclassicality(const SingleModeCovariance& v);

// max{0, 1/2 - lambda_min} with lambda_min the smallest eigenvalue of the
// full 4x4 Hermitian matrix; coincides with the single-mode depth on product
// states whose other factor is classical.
double two_mode_nonclassical_depth(const TwoModeCovariance& v);

// S = 2(Det A + Det B - 2 Det C).
double s_quantity(const TwoModeCovariance& v);

// Logarithmic negativity from the scalar pair (S, Det V); the radicand
// S^2 - 16 Det V is clamped to zero within -1e-12 and rejected below -1e-9.
double log_negativity_from_scalars(double s, double det);

// E_N = max{0, -1/2 log2(S - sqrt(S^2 - 16 Det V))} in bits; zero exactly for
// separable two-mode Gaussian states.
double log_negativity(const TwoModeCovariance& v);

// Independent route: smallest symplectic eigenvalue nu~ of the real-quadrature
// covariance after a momentum sign flip on mode 2; returns max{0, -log2(2 nu~)}.
double oracle_log_negativity(const TwoModeCovariance& v);

// S_N = log2(lambda~_1min lambda~_2min / (lambda_1min lambda_2min)) from the
// diagonal blocks of the input and output covariances. Negative values
// quantify the distance from entanglement.
double s_n(const TwoModeCovariance& v_in, const TwoModeCovariance& v_out);

// Same quantity from minimum eigenvalues alone, assuming the phase condition:
// lambda~_1 = l1 cos^2 + l2 sin^2, lambda~_2 mirrored. Independent of the
// maximum eigenvalues (and hence of purity) by construction.
double s_n_from_minima(double lambda1_min, double lambda2_min, double theta);

// C = 8 l1min l2min (l1max - l2max) / (l2min - l1min); throws DegenerateCase
// when the denominator vanishes.
double c_constant(const SingleModeCovariance& v1, const SingleModeCovariance& v2);

// |S - (1/2 + 8 Det V_out) - C (lambda~_1 lambda~_2 / (l1 l2) - 1)| for one
// beam-splitter event. Meaningful when at least one input is pure and phi
// obeys the phase condition.
double identity_residual(const SingleModeCovariance& v1, const SingleModeCovariance& v2,
                         const BeamSplitterParams& p);

// S > 1/2 + 8 Det V_out, equivalent to E_N > 0.
bool entanglement_condition(const TwoModeCovariance& v);

// All measures and conservation residuals for a single beam-splitter event.
struct MeasureReport {
  double tau1 = 0.0;
  double tau2 = 0.0;
  double tau1_out = 0.0;
  double tau2_out = 0.0;
  double n_in = 0.0;   // summed input nonclassicality, bits
  double n_out = 0.0;  // summed output nonclassicality, bits
  double s_n = 0.0;
  double e_n = 0.0;
  double s_quantity = 0.0;
  // Unset when the minimum eigenvalues coincide (degenerate denominator).
  std::optional<double> c_constant;
  // Unset unless at least one input is pure and c_constant is defined.
  std::optional<double> identity_residual;
  double residual_conservation = 0.0;  // |n_in - n_out - s_n|
};

MeasureReport report(const SingleModeCovariance& v1, const SingleModeCovariance& v2,
                     const BeamSplitterParams& p);

}  // namespace gaussbs
