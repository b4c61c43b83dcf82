// gauss-bs: sweep tables for the standard figures, randomized invariant
// verification, and cascade experiments over Gaussian beam-splitter networks.
//
// Exit codes: 0 success, 1 property violation, 2 usage or config error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussbs/cascade.hpp"
#include "gaussbs/csv.hpp"
#include "gaussbs/figures.hpp"
#include "gaussbs/measures.hpp"
#include "gaussbs/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

// Residual threshold for the per-row conservation check of `cascade`.
constexpr double kConservationTol = 1e-10;

int write_table(const gaussbs::Table& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return kExitUsage;
  }
  gaussbs::write_csv(table, out);
  out.flush();
  if (!out) {
    std::cerr << "error: failed while writing: " << path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

struct FigureOptions {
  std::string id;
  std::string out_path;
  double lambda1_min = std::numeric_limits<double>::quiet_NaN();
  double lambda2_min = std::numeric_limits<double>::quiet_NaN();
  double n_thermal = std::numeric_limits<double>::quiet_NaN();
  double purity = std::numeric_limits<double>::quiet_NaN();
  int points = 201;
};

int run_figure(const FigureOptions& opt) {
  gaussbs::FigureRequest request;
  request.id = opt.id;
  request.points = opt.points;
  const auto set = [](double v) -> std::optional<double> {
    if (std::isnan(v)) {
      return std::nullopt;
    }
    return v;
  };
  request.lambda1_min = set(opt.lambda1_min);
  request.lambda2_min = set(opt.lambda2_min);
  request.n_thermal = set(opt.n_thermal);
  request.purity = set(opt.purity);
  try {
    return write_table(gaussbs::make_figure(request), opt.out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_verify(std::uint64_t seed, std::size_t cases, double tol) {
  const gaussbs::VerificationReport report = gaussbs::run_verification(seed, cases);
  std::cout << "verification: seed=" << seed << " cases=" << cases
            << " tol=" << gaussbs::format_double(tol) << "\n";
  for (const gaussbs::SuiteResult& suite : report.suites) {
    std::cout << "  " << suite.name;
    for (std::size_t pad = suite.name.size(); pad < 32; ++pad) {
      std::cout << ' ';
    }
    std::cout << " instances=" << suite.instances
              << " max_residual=" << gaussbs::format_double(suite.max_residual)
              << " violations=" << suite.violations << "\n";
  }
  const bool ok = report.passed(tol);
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitViolation;
}

struct CascadeConfig {
  std::string protocol;
  gaussbs::SingleModeCovariance input = gaussbs::SingleModeCovariance::vacuum();
  int depth = 0;    // tree
  int stages = 0;   // depletion
  std::uint64_t seed = 0;
  // exactly one of: constant angle, per-level list, seeded random
  std::optional<double> theta_constant;
  std::optional<std::vector<double>> theta_list;
  bool theta_random = false;
};

CascadeConfig parse_cascade_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file: " + path);
  }
  nlohmann::json doc = nlohmann::json::parse(in);  // throws with position info

  static const std::vector<std::string> known = {
      "protocol", "lambda1_min", "a", "b_re", "b_im", "depth", "stages",
      "theta_schedule", "seed"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw std::invalid_argument("unknown config key: \"" + key + "\"");
    }
  }

  CascadeConfig config;
  if (!doc.contains("protocol") || !doc["protocol"].is_string()) {
    throw std::invalid_argument("config field \"protocol\" (string) is required");
  }
  config.protocol = doc["protocol"].get<std::string>();
  if (config.protocol != "tree" && config.protocol != "depletion") {
    throw std::invalid_argument("protocol must be \"tree\" or \"depletion\"");
  }

  const bool has_lambda = doc.contains("lambda1_min");
  const bool has_ab = doc.contains("a") || doc.contains("b_re") || doc.contains("b_im");
  if (has_lambda == has_ab) {
    throw std::invalid_argument(
        "specify the input as either \"lambda1_min\" or \"a\"/\"b_re\"/\"b_im\"");
  }
  if (has_lambda) {
    const double lambda1 = doc["lambda1_min"].get<double>();
    if (!(lambda1 > 0.0 && lambda1 <= 0.5)) {
      throw std::invalid_argument("lambda1_min must lie in (0, 1/2]");
    }
    const double lambda1_max = 1.0 / (4.0 * lambda1);
    config.input = gaussbs::SingleModeCovariance((lambda1 + lambda1_max) / 2.0,
                                                 (lambda1_max - lambda1) / 2.0);
  } else {
    if (!doc.contains("a")) {
      throw std::invalid_argument("config field \"a\" is required with b_re/b_im");
    }
    const double a = doc["a"].get<double>();
    const double b_re = doc.value("b_re", 0.0);
    const double b_im = doc.value("b_im", 0.0);
    config.input = gaussbs::SingleModeCovariance(a, {b_re, b_im});
  }

  if (config.protocol == "tree") {
    if (doc.contains("stages")) {
      throw std::invalid_argument("\"stages\" applies to the depletion protocol only");
    }
    if (!doc.contains("depth")) {
      throw std::invalid_argument("tree protocol requires \"depth\"");
    }
    config.depth = doc["depth"].get<int>();
    if (config.depth < 1 || config.depth > gaussbs::kMaxTreeDepth) {
      throw std::invalid_argument("depth must lie in [1, 24]");
    }
  } else {
    if (doc.contains("depth")) {
      throw std::invalid_argument("\"depth\" applies to the tree protocol only");
    }
    if (!doc.contains("stages")) {
      throw std::invalid_argument("depletion protocol requires \"stages\"");
    }
    config.stages = doc["stages"].get<int>();
    if (config.stages < 1 || config.stages > 64) {
      throw std::invalid_argument("stages must lie in [1, 64]");
    }
  }

  config.seed = doc.value("seed", std::uint64_t{0});

  if (!doc.contains("theta_schedule")) {
    config.theta_constant = std::numbers::pi / 4.0;
  } else if (doc["theta_schedule"].is_number()) {
    config.theta_constant = doc["theta_schedule"].get<double>();
  } else if (doc["theta_schedule"].is_array()) {
    config.theta_list = doc["theta_schedule"].get<std::vector<double>>();
    const std::size_t expected = static_cast<std::size_t>(
        config.protocol == "tree" ? config.depth : config.stages);
    if (config.theta_list->size() != expected) {
      throw std::invalid_argument("theta_schedule list must have " +
                                  std::to_string(expected) + " entries");
    }
  } else if (doc["theta_schedule"].is_string() &&
             doc["theta_schedule"].get<std::string>() == "random") {
    config.theta_random = true;
  } else {
    throw std::invalid_argument(
        "theta_schedule must be a number, a list of numbers, or \"random\"");
  }
  return config;
}

int run_cascade_tree(const CascadeConfig& config, const std::string& out_path) {
  gaussbs::AngleSchedule schedule;
  if (config.theta_constant) {
    schedule = gaussbs::schedules::constant(*config.theta_constant);
  } else if (config.theta_list) {
    schedule = gaussbs::schedules::per_level(*config.theta_list);
  } else {
    schedule = gaussbs::schedules::seeded_random(config.seed);
  }
  const gaussbs::CascadeTree tree =
      gaussbs::split_tree(config.input, config.depth, schedule);

  gaussbs::Table table;
  table.header = {"level", "sum_tau", "sum_n", "cum_s_n", "residual"};
  bool violated = false;
  for (const gaussbs::TreeLevel& level : tree.levels) {
    table.rows.push_back({static_cast<double>(level.level), level.sum_tau,
                          level.sum_nonclassicality, level.cumulative_s_n,
                          level.conservation_residual});
    violated = violated || !(level.conservation_residual < kConservationTol);
  }
  const int rc = write_table(table, out_path);
  if (rc != kExitOk) {
    return rc;
  }
  const gaussbs::LimitTotals limits = gaussbs::limit_totals(config.input);
  const gaussbs::TreeLevel& last = tree.levels.back();
  std::cout << "tree depth " << tree.depth << ": sum_n="
            << gaussbs::format_double(last.sum_nonclassicality)
            << " cum_s_n=" << gaussbs::format_double(last.cumulative_s_n) << "\n"
            << "limit totals: n_tot=" << gaussbs::format_double(limits.n_tot)
            << " s_tot=" << gaussbs::format_double(limits.s_tot)
            << " |sum_n - n_tot|="
            << gaussbs::format_double(std::abs(last.sum_nonclassicality - limits.n_tot))
            << "\n";
  if (violated) {
    std::cerr << "conservation residual exceeded " << kConservationTol << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

int run_cascade_depletion(const CascadeConfig& config, const std::string& out_path) {
  std::vector<double> thetas;
  if (config.theta_constant) {
    thetas.assign(static_cast<std::size_t>(config.stages), *config.theta_constant);
  } else if (config.theta_list) {
    thetas = *config.theta_list;
  } else {
    const gaussbs::AngleSchedule schedule = gaussbs::schedules::seeded_random(config.seed);
    for (int i = 0; i < config.stages; ++i) {
      thetas.push_back(schedule(i, 0));
    }
  }

  // Phases follow the phase condition stage by stage.
  std::vector<double> phis;
  {
    gaussbs::SingleModeCovariance in1 = config.input;
    gaussbs::SingleModeCovariance in2 = gaussbs::SingleModeCovariance::vacuum();
    for (double theta : thetas) {
      const double phi = gaussbs::phase_condition(in1.b(), in2.b());
      phis.push_back(phi);
      const gaussbs::OutputBlocks out =
          gaussbs::output_blocks(in1, in2, gaussbs::BeamSplitterParams(theta, phi));
      in1 = out.mode_a;
      in2 = out.mode_b;
    }
  }
  const gaussbs::DepletionRun run = gaussbs::depletion_run(config.input, thetas, phis);

  const double n0 = gaussbs::nonclassicality(config.input);
  gaussbs::Table table;
  table.header = {"level", "sum_tau", "sum_n", "cum_s_n", "residual"};
  table.rows.push_back({0.0, gaussbs::nonclassical_depth(config.input), n0, 0.0, 0.0});
  bool violated = false;
  double cum_s_n = 0.0;
  for (std::size_t i = 0; i < run.stages.size(); ++i) {
    const gaussbs::DepletionStage& stage = run.stages[i];
    cum_s_n += stage.s_n;
    const double sum_n =
        gaussbs::nonclassicality(stage.out1) + gaussbs::nonclassicality(stage.out2);
    const double residual = std::abs(n0 - sum_n - cum_s_n);
    table.rows.push_back({static_cast<double>(i + 1), stage.tau_product, sum_n, cum_s_n,
                          residual});
    violated = violated || !(residual < kConservationTol);
  }
  const int rc = write_table(table, out_path);
  if (rc != kExitOk) {
    return rc;
  }
  if (violated) {
    std::cerr << "conservation residual exceeded " << kConservationTol << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

int run_cascade(const std::string& config_path, const std::string& out_path) {
  CascadeConfig config;
  try {
    config = parse_cascade_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return config.protocol == "tree" ? run_cascade_tree(config, out_path)
                                     : run_cascade_depletion(config, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian beam-splitter toolkit"};
  app.require_subcommand(1);

  FigureOptions figure;
  CLI::App* figure_cmd = app.add_subcommand("figure", "write one sweep table as CSV");
  figure_cmd->add_option("id", figure.id, "one of fig2, fig3, fig4a, fig4b, fig5, fig6")
      ->required();
  figure_cmd->add_option("--lambda1-min", figure.lambda1_min,
                         "minimum eigenvalue of the first input");
  figure_cmd->add_option("--lambda2-min", figure.lambda2_min,
                         "minimum eigenvalue of the second input (fig6)");
  figure_cmd->add_option("--n-thermal", figure.n_thermal,
                         "thermal photon number of the second input (fig5)");
  figure_cmd->add_option("--purity", figure.purity, "purity of the first input");
  figure_cmd->add_option("--points", figure.points, "sweep points (default 201)");
  figure_cmd->add_option("--out", figure.out_path, "output CSV path")->required();

  std::uint64_t seed = 42;
  std::size_t cases = 1000;
  double tol = 1e-10;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the randomized invariant suites");
  verify_cmd->add_option("--seed", seed, "RNG seed (default 42)");
  verify_cmd->add_option("--cases", cases, "instances per suite (default 1000)");
  verify_cmd->add_option("--tol", tol, "residual tolerance (default 1e-10)");

  std::string config_path;
  std::string cascade_out;
  CLI::App* cascade_cmd =
      app.add_subcommand("cascade", "run a configured cascade experiment");
  cascade_cmd->add_option("--config", config_path, "JSON config path")->required();
  cascade_cmd->add_option("--out", cascade_out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message/help
    return kExitUsage;
  }

  if (figure_cmd->parsed()) {
    return run_figure(figure);
  }
  if (verify_cmd->parsed()) {
    if (cases < 1) {
      std::cerr << "error: --cases must be at least 1\n";
      return kExitUsage;
    }
    if (!(tol > 0.0)) {
      std::cerr << "error: --tol must be positive\n";
      return kExitUsage;
    }
    return run_verify(seed, cases, tol);
  }
  return run_cascade(config_path, cascade_out);
}
