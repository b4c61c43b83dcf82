#include "gaussbs/figures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gaussbs/cascade.hpp"
#include "gaussbs/measures.hpp"

namespace gaussbs {

namespace {

constexpr double kPi = std::numbers::pi;

double require(const std::optional<double>& field, double fallback) {
  return field.value_or(fallback);
}

void reject(const std::optional<double>& field, const char* name, const std::string& id) {
  if (field.has_value()) {
    throw std::invalid_argument("override --" + std::string(name) +
                                " is not applicable to " + id);
  }
}

SingleModeCovariance nonclassical_input(double lambda_min, double u) {
  if (!(lambda_min > 0.0 && lambda_min <= 0.5)) {
    throw std::invalid_argument("lambda1-min must lie in (0, 1/2]");
  }
  if (!(u > 0.0 && u <= 1.0)) {
    throw std::invalid_argument("purity must lie in (0, 1]");
  }
  const double lambda_max = 1.0 / (4.0 * u * u * lambda_min);
  return SingleModeCovariance((lambda_min + lambda_max) / 2.0,
                              (lambda_max - lambda_min) / 2.0);
}

double sweep_theta(int i, int points) {
  return (kPi / 2.0) * static_cast<double>(i) / static_cast<double>(points - 1);
}

Table fig2(const FigureRequest& req) {
  reject(req.lambda2_min, "lambda2-min", req.id);
  reject(req.n_thermal, "n-thermal", req.id);
  const SingleModeCovariance ncs =
      nonclassical_input(require(req.lambda1_min, 0.335), require(req.purity, 1.0));
  const SingleModeCovariance vac = SingleModeCovariance::vacuum();
  Table t;
  t.header = {"theta", "e_n", "tau_remaining"};
  for (int i = 0; i < req.points; ++i) {
    const double theta = sweep_theta(i, req.points);
    const BeamSplitterParams p(theta, phase_condition(ncs.b(), vac.b()));
    const TwoModeCovariance out = apply(tensor(ncs, vac), p);
    const double tau = two_mode_nonclassical_depth(partial_trace_product(out));
    t.rows.push_back({theta, log_negativity(out), tau});
  }
  return t;
}

Table fig3(const FigureRequest& req) {
  reject(req.lambda2_min, "lambda2-min", req.id);
  reject(req.n_thermal, "n-thermal", req.id);
  const SingleModeCovariance ncs =
      nonclassical_input(require(req.lambda1_min, 0.335), require(req.purity, 1.0));
  Table t;
  t.header = {"theta", "e_n_bs1", "e_n_bs2", "e_n_bs3", "e_n_bs4",
              "tau_1", "tau_2",   "tau_3",   "tau_4"};
  for (int i = 0; i < req.points; ++i) {
    const double theta = sweep_theta(i, req.points);
    // All four stages share the swept angle; phases follow the phase condition.
    std::vector<double> thetas(4, theta);
    std::vector<double> phis;
    SingleModeCovariance in1 = ncs;
    SingleModeCovariance in2 = SingleModeCovariance::vacuum();
    for (int s = 0; s < 4; ++s) {
      const double phi = phase_condition(in1.b(), in2.b());
      phis.push_back(phi);
      const OutputBlocks out = output_blocks(in1, in2, BeamSplitterParams(theta, phi));
      in1 = out.mode_a;
      in2 = out.mode_b;
    }
    const DepletionRun run = depletion_run(ncs, thetas, phis);
    std::vector<double> row{theta};
    for (const DepletionStage& stage : run.stages) {
      row.push_back(stage.e_n);
    }
    for (const DepletionStage& stage : run.stages) {
      row.push_back(stage.tau_product);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table fig4a(const FigureRequest& req) {
  reject(req.lambda2_min, "lambda2-min", req.id);
  reject(req.n_thermal, "n-thermal", req.id);
  reject(req.purity, "purity", req.id);
  const double lambda1 = require(req.lambda1_min, 0.335);
  const double us[3] = {1.0, 0.8, 0.5};
  Table t;
  t.header = {"theta",    "s_n_u100", "s_n_u080", "s_n_u050",
              "e_n_u100", "e_n_u080", "e_n_u050"};
  for (int i = 0; i < req.points; ++i) {
    const double theta = sweep_theta(i, req.points);
    std::vector<double> row{theta};
    // S_N depends only on the minimum eigenvalues, so the same closed form
    // serves every purity.
    const double sn = s_n_from_minima(lambda1, 0.5, theta);
    row.insert(row.end(), {sn, sn, sn});
    for (double u : us) {
      const SingleModeCovariance ncs = nonclassical_input(lambda1, u);
      const TwoModeCovariance out = apply(tensor(ncs, SingleModeCovariance::vacuum()),
                                          BeamSplitterParams(theta, 0.0));
      row.push_back(log_negativity(out));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table fig4b(const FigureRequest& req) {
  reject(req.lambda1_min, "lambda1-min", req.id);
  reject(req.lambda2_min, "lambda2-min", req.id);
  reject(req.n_thermal, "n-thermal", req.id);
  reject(req.purity, "purity", req.id);
  Table t;
  t.header = {"inv_two_lambda_min", "s_n", "e_n"};
  for (int i = 0; i < req.points; ++i) {
    const double x =
        1.0 + 9.0 * static_cast<double>(i) / static_cast<double>(req.points - 1);
    const double lambda1 = 1.0 / (2.0 * x);
    const SingleModeCovariance ncs = nonclassical_input(lambda1, 1.0);
    const TwoModeCovariance out = apply(tensor(ncs, SingleModeCovariance::vacuum()),
                                        BeamSplitterParams(kPi / 4.0, 0.0));
    t.rows.push_back({x, s_n_from_minima(lambda1, 0.5, kPi / 4.0), log_negativity(out)});
  }
  return t;
}

Table fig_conservation(const FigureRequest& req, const SingleModeCovariance& first,
                       const SingleModeCovariance& second) {
  Table t;
  t.header = {"theta", "n_in", "n_out", "s_n", "e_n"};
  for (int i = 0; i < req.points; ++i) {
    const double theta = sweep_theta(i, req.points);
    const BeamSplitterParams p(theta, phase_condition(first.b(), second.b()));
    const MeasureReport r = report(first, second, p);
    t.rows.push_back({theta, r.n_in, r.n_out, r.s_n, r.e_n});
  }
  return t;
}

Table fig5(const FigureRequest& req) {
  reject(req.lambda2_min, "lambda2-min", req.id);
  const SingleModeCovariance ncs =
      nonclassical_input(require(req.lambda1_min, 0.335), require(req.purity, 1.0));
  SingleModeCovariance second = SingleModeCovariance::vacuum();
  if (req.n_thermal.has_value()) {
    if (!(*req.n_thermal >= 0.0)) {
      throw std::invalid_argument("n-thermal must be non-negative");
    }
    second = thermal_state(*req.n_thermal);
  }
  return fig_conservation(req, ncs, second);
}

Table fig6(const FigureRequest& req) {
  reject(req.n_thermal, "n-thermal", req.id);
  reject(req.purity, "purity", req.id);
  const SingleModeCovariance v1 = nonclassical_input(require(req.lambda1_min, 0.1), 1.0);
  const SingleModeCovariance v2 = nonclassical_input(require(req.lambda2_min, 0.335), 1.0);
  return fig_conservation(req, v1, v2);
}

}  // namespace

Table make_figure(const FigureRequest& request) {
  if (request.points < 2) {
    throw std::invalid_argument("points must be at least 2");
  }
  if (request.id == "fig2") return fig2(request);
  if (request.id == "fig3") return fig3(request);
  if (request.id == "fig4a") return fig4a(request);
  if (request.id == "fig4b") return fig4b(request);
  if (request.id == "fig5") return fig5(request);
  if (request.id == "fig6") return fig6(request);
  throw std::invalid_argument("unknown figure id: " + request.id);
}

}  // namespace gaussbs
