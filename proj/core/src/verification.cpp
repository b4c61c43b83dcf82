#include "gaussbs/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/LU>

#include "gaussbs/beamsplitter.hpp"
#include "gaussbs/cascade.hpp"
#include "gaussbs/measures.hpp"
#include "gaussbs/sampling.hpp"

namespace gaussbs {

namespace {

constexpr double kPi = std::numbers::pi;

struct SuiteRun {
  SuiteResult result;

  explicit SuiteRun(std::string name) { result.name = std::move(name); }

  void residual(double r) { result.max_residual = std::max(result.max_residual, r); }
  void check(bool ok) { result.violations += ok ? 0 : 1; }
  void instance() { result.instances += 1; }
};

Sampler suite_sampler(std::uint64_t seed, std::uint64_t suite_index) {
  return Sampler(seed ^ (0xa0761d6478bd642fULL * (suite_index + 1)));
}

SuiteResult single_mode_closed_forms(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("single_mode_closed_forms");
  Sampler rng = suite_sampler(seed, 1);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const SingleModeCovariance v = rng.single_mode();
    const double slack = v.a() * v.a() - std::norm(v.b()) - 0.25;
    run.residual(std::max(0.0, -slack - 1e-12));
    const auto [lmin, lmax] = eigenvalues(v);
    run.residual(std::abs(lmin + lmax - 2.0 * v.a()));
    run.residual(std::abs(lmax - lmin - 2.0 * std::abs(v.b())));
    const double n = rng.uniform(0.0, 4.0);
    run.residual(std::abs(purity(thermal_state(n)) - 1.0 / (2.0 * n + 1.0)));
  }
  return run.result;
}

SuiteResult real_quadrature_determinant(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("real_quadrature_determinant");
  Sampler rng = suite_sampler(seed, 2);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const TwoModeCovariance v = rng.two_mode();
    const double det_complex = v.determinant();
    const double det_real = to_real_quadrature(v).determinant();
    run.residual(std::abs(det_real - det_complex) / std::max(1.0, std::abs(det_complex)));
  }
  return run.result;
}

SuiteResult determinant_conservation(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("determinant_conservation");
  Sampler rng = suite_sampler(seed, 3);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const TwoModeCovariance v_in = tensor(rng.single_mode(), rng.single_mode());
    const TwoModeCovariance v_out = apply(v_in, rng.params());
    run.residual(std::abs(v_out.determinant() - v_in.determinant()));
  }
  return run.result;
}

SuiteResult eigenvalue_sum_conservation(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("eigenvalue_sum_conservation");
  Sampler rng = suite_sampler(seed, 4);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const SingleModeCovariance v1 = rng.single_mode();
    const SingleModeCovariance v2 = rng.single_mode();
    const double theta = rng.theta();
    const BeamSplitterParams p(theta, phase_condition(v1.b(), v2.b()));
    const OutputBlocks out = output_blocks(v1, v2, p);
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    run.residual(std::abs(v1.lambda_min() + v2.lambda_min() - out.mode_a.lambda_min() -
                          out.mode_b.lambda_min()));
    run.residual(std::abs(out.mode_a.lambda_min() -
                          (v1.lambda_min() * c2 + v2.lambda_min() * s2)));
  }
  return run.result;
}

SuiteResult output_blocks_equivalence(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("output_blocks_equivalence");
  Sampler rng = suite_sampler(seed, 5);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const SingleModeCovariance v1 = rng.single_mode();
    const SingleModeCovariance v2 = rng.single_mode();
    const BeamSplitterParams p = rng.params();
    const OutputBlocks closed = output_blocks(v1, v2, p);
    const TwoModeCovariance product = apply(tensor(v1, v2), p);
    const Eigen::Matrix4cd delta =
        TwoModeCovariance::from_blocks(closed.mode_a, closed.mode_b, closed.cross).matrix() -
        product.matrix();
    run.residual(delta.cwiseAbs().maxCoeff());
  }
  return run.result;
}

SuiteResult beam_splitter_composition(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("beam_splitter_composition");
  Sampler rng = suite_sampler(seed, 6);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const TwoModeCovariance v = tensor(rng.single_mode(), rng.single_mode());
    const BeamSplitterParams p1 = rng.params();
    const BeamSplitterParams p2 = rng.params();
    const Eigen::Matrix4cd stepwise = apply(apply(v, p1), p2).matrix();
    const Eigen::Matrix4cd combined = unitary(p1) * unitary(p2);
    const Eigen::Matrix4cd direct = combined.adjoint() * v.matrix() * combined;
    run.residual((stepwise - direct).cwiseAbs().maxCoeff());
  }
  return run.result;
}

SuiteResult depth_conservation_vacuum(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("depth_conservation_vacuum");
  Sampler rng = suite_sampler(seed, 7);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const SingleModeCovariance ncs = rng.nonclassical(rng.uniform(0.0, 1.0) < 0.5);
    const double theta = rng.theta();
    const BeamSplitterParams p(theta, phase_condition(ncs.b(), 0.0));
    const OutputBlocks out = output_blocks(ncs, SingleModeCovariance::vacuum(), p);
    const double tau = nonclassical_depth(ncs);
    const double tau1 = nonclassical_depth(out.mode_a);
    const double tau2 = nonclassical_depth(out.mode_b);
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    run.residual(std::abs(tau - tau1 - tau2));
    run.residual(std::abs(tau1 - tau * c2));
    run.residual(std::abs(tau2 - tau * s2));
  }
  return run.result;
}

SuiteResult partial_trace_separability(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("partial_trace_separability");
  Sampler rng = suite_sampler(seed, 8);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const TwoModeCovariance v = rng.two_mode();
    run.residual(log_negativity(partial_trace_product(v)));
  }
  return run.result;
}

SuiteResult oracle_equivalence(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("oracle_equivalence");
  Sampler rng = suite_sampler(seed, 9);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const TwoModeCovariance v = rng.two_mode();
    run.residual(std::abs(log_negativity(v) - oracle_log_negativity(v)));
  }
  return run.result;
}

SuiteResult s_quantity_closed_form(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("s_quantity_closed_form");
  Sampler rng = suite_sampler(seed, 10);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const auto [v1, v2] = rng.constrained_pair();
    const double theta = rng.theta();
    const BeamSplitterParams p(theta, phase_condition(v1.b(), v2.b()));
    const double s = s_quantity(apply(tensor(v1, v2), p));
    const double closed =
        (v1.lambda_min() + v2.lambda_min()) * (v1.lambda_max() + v2.lambda_max()) +
        (v1.lambda_min() - v2.lambda_min()) * (v1.lambda_max() - v2.lambda_max()) *
            std::cos(4.0 * theta);
    run.residual(std::abs(s - closed));
  }
  return run.result;
}

SuiteResult conservation_relation(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("conservation_relation");
  Sampler rng = suite_sampler(seed, 11);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const auto [v1, v2] = rng.constrained_pair();
    const BeamSplitterParams p(rng.theta(), phase_condition(v1.b(), v2.b()));
    run.residual(report(v1, v2, p).residual_conservation);
  }
  return run.result;
}

SuiteResult c_constant_identity(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("c_constant_identity");
  Sampler rng = suite_sampler(seed, 12);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const auto [v1, v2] = rng.constrained_pair();
    const BeamSplitterParams p(rng.theta(), phase_condition(v1.b(), v2.b()));
    run.residual(identity_residual(v1, v2, p));
  }
  return run.result;
}

SuiteResult purity_independence(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("purity_independence");
  Sampler rng = suite_sampler(seed, 13);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const double lambda1 = rng.uniform(0.06, 0.45);
    const SingleModeCovariance v2 = rng.single_mode();
    const double theta = rng.theta();
    double values[2];
    for (double& value : values) {
      const double u = rng.uniform(0.3, 1.0);
      const double lambda1_max = 1.0 / (4.0 * u * u * lambda1);
      const SingleModeCovariance v1((lambda1 + lambda1_max) / 2.0,
                                    (lambda1_max - lambda1) / 2.0);
      const BeamSplitterParams p(theta, phase_condition(v1.b(), v2.b()));
      const TwoModeCovariance v_in = tensor(v1, v2);
      value = s_n(v_in, apply(v_in, p));
    }
    run.residual(std::abs(values[0] - values[1]));
  }
  return run.result;
}

SuiteResult sign_equivalence(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("sign_equivalence");
  Sampler rng = suite_sampler(seed, 14);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const auto [v1, v2] = rng.constrained_pair();
    const BeamSplitterParams p(rng.theta(), phase_condition(v1.b(), v2.b()));
    const MeasureReport r = report(v1, v2, p);
    const bool sn_positive = r.s_n > 1e-12;
    const bool en_positive = r.e_n > 1e-12;
    run.check(sn_positive == en_positive);
  }
  return run.result;
}

SuiteResult entanglement_monotonicity(std::uint64_t seed, std::size_t /*cases*/) {
  SuiteRun run("entanglement_monotonicity");
  (void)seed;
  double prev_en = -1.0;
  double prev_sn = -1.0;
  for (int i = 0; i < 41; ++i) {
    run.instance();
    const double x = 1.05 + (10.0 - 1.05) * i / 40.0;
    const double lambda1 = 1.0 / (2.0 * x);
    const double lambda1_max = 1.0 / (4.0 * lambda1);
    const SingleModeCovariance v1((lambda1 + lambda1_max) / 2.0,
                                  (lambda1_max - lambda1) / 2.0);
    const TwoModeCovariance out = apply(tensor(v1, SingleModeCovariance::vacuum()),
                                        BeamSplitterParams(kPi / 4.0, 0.0));
    const double en = log_negativity(out);
    const double sn = s_n_from_minima(lambda1, 0.5, kPi / 4.0);
    run.check(en > prev_en && sn > prev_sn);
    prev_en = en;
    prev_sn = sn;
  }
  return run.result;
}

SuiteResult purity_entanglement_order(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("purity_entanglement_order");
  Sampler rng = suite_sampler(seed, 16);
  for (std::size_t i = 0; i < cases; ++i) {
    run.instance();
    const double lambda1 = rng.uniform(0.06, 0.45);
    // theta away from 0, pi/4, pi/2 where the ordering collapses to equality
    double theta = rng.uniform(0.05, kPi / 4.0 - 0.05);
    if (rng.uniform(0.0, 1.0) < 0.5) {
      theta = kPi / 2.0 - theta;
    }
    const auto en_for = [&](double u) {
      const double lambda1_max = 1.0 / (4.0 * u * u * lambda1);
      const SingleModeCovariance v1((lambda1 + lambda1_max) / 2.0,
                                    (lambda1_max - lambda1) / 2.0);
      return log_negativity(
          apply(tensor(v1, SingleModeCovariance::vacuum()), BeamSplitterParams(theta, 0.0)));
    };
    run.check(en_for(1.0) >= en_for(rng.uniform(0.3, 0.95)) - 1e-12);
  }
  return run.result;
}

SuiteResult tree_level_conservation(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("tree_level_conservation");
  Sampler rng = suite_sampler(seed, 17);
  const std::size_t trees = std::min<std::size_t>(cases, 8);
  for (std::size_t i = 0; i < trees; ++i) {
    run.instance();
    const SingleModeCovariance ncs = rng.nonclassical(true);
    const CascadeTree tree =
        split_tree(ncs, 12, schedules::seeded_random(seed + 1000 * i));
    for (const TreeLevel& level : tree.levels) {
      run.residual(std::abs(level.sum_tau - tree.input_tau));
      run.residual(level.conservation_residual);
    }
  }
  return run.result;
}

SuiteResult tree_limit_monotonicity(std::uint64_t seed, std::size_t /*cases*/) {
  SuiteRun run("tree_limit_monotonicity");
  (void)seed;
  const double lambda1 = 0.25;
  const double lambda1_max = 1.0 / (4.0 * lambda1);
  const SingleModeCovariance ncs((lambda1 + lambda1_max) / 2.0, (lambda1_max - lambda1) / 2.0);
  const LimitTotals limits = limit_totals(ncs);
  double prev = std::numeric_limits<double>::infinity();
  for (int depth = 1; depth <= 16; ++depth) {
    run.instance();
    const CascadeTree tree = split_tree(ncs, depth, schedules::constant(kPi / 4.0));
    const double err = std::abs(tree.levels.back().sum_nonclassicality - limits.n_tot);
    run.check(err < prev);
    prev = err;
  }
  return run.result;
}

SuiteResult depletion_identical_inputs(std::uint64_t seed, std::size_t cases) {
  SuiteRun run("depletion_identical_inputs");
  Sampler rng = suite_sampler(seed, 19);
  const std::size_t runs = std::min<std::size_t>(cases, 64);
  for (std::size_t i = 0; i < runs; ++i) {
    run.instance();
    const SingleModeCovariance ncs = rng.nonclassical(true);
    // A balanced first splitter makes the stage-2 inputs identical up to the
    // phase tracked by the phase condition, so the second stage cannot
    // extract entanglement.
    const double phi1 = phase_condition(ncs.b(), 0.0);
    const OutputBlocks stage1 = output_blocks(ncs, SingleModeCovariance::vacuum(),
                                              BeamSplitterParams(kPi / 4.0, phi1));
    const double phi2 = phase_condition(stage1.mode_a.b(), stage1.mode_b.b());
    const double thetas[2] = {kPi / 4.0, rng.theta()};
    const double phis[2] = {phi1, phi2};
    const DepletionRun dep = depletion_run(ncs, thetas, phis);
    run.residual(dep.stages[1].e_n);
  }
  return run.result;
}

}  // namespace

bool VerificationReport::passed(double tol) const {
  for (const SuiteResult& suite : suites) {
    if (!(suite.max_residual < tol) || suite.violations != 0) {
      return false;
    }
  }
  return true;
}

VerificationReport run_verification(std::uint64_t seed, std::size_t cases) {
  VerificationReport report;
  report.suites = {
      single_mode_closed_forms(seed, cases),
      real_quadrature_determinant(seed, cases),
      determinant_conservation(seed, cases),
      eigenvalue_sum_conservation(seed, cases),
      output_blocks_equivalence(seed, cases),
      beam_splitter_composition(seed, cases),
      depth_conservation_vacuum(seed, cases),
      partial_trace_separability(seed, cases),
      oracle_equivalence(seed, cases),
      s_quantity_closed_form(seed, cases),
      conservation_relation(seed, cases),
      c_constant_identity(seed, cases),
      purity_independence(seed, cases),
      sign_equivalence(seed, cases),
      entanglement_monotonicity(seed, cases),
      purity_entanglement_order(seed, cases),
      tree_level_conservation(seed, cases),
      tree_limit_monotonicity(seed, cases),
      depletion_identical_inputs(seed, cases),
  };
  return report;
}

}  // namespace gaussbs
