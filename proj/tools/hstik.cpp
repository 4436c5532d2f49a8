// Experiment harness: table reproduction, single solves, invariant suite.
//
// Exit status: 0 success, 1 failed property or failed table row,
// 2 configuration error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hstik/auxiliary.hpp"
#include "hstik/errors.hpp"
#include "hstik/experiments.hpp"
#include "hstik/format.hpp"
#include "hstik/invariants.hpp"

namespace {

using namespace hstik;

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::size_t n = 6000;
  double q = 2.31;
  double rho = 3.0;
  double coefficient = 7.0;
  double source_kappa = 1.8;
  std::vector<std::uint64_t> seeds;
  std::vector<double> ladder;
  std::string rule;
  double kappa = 2.0;
  double c0 = 1.0;
  double b = 4.0;
  double theta = 10.0;
  double alpha0 = 1.0;
  int max_steps = 60;
  std::string format = "csv";
  std::string out;
  std::string noise = "sign";
  double delta = 1e-3;
  double alpha = 1e-6;
  std::uint64_t seed = 1000;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "Truncation length N")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 26));
  cmd->add_option("--q", o.q, "Decay exponent of the exact solution");
  cmd->add_option("--rho", o.rho, "Domain ball radius");
  cmd->add_option("--coefficient", o.coefficient, "Linear coefficient of the forward map");
  cmd->add_option("--source-kappa", o.source_kappa, "Exponent of the logarithmic index function");
  cmd->add_option("--seeds", o.seeds, "Base seeds")->delimiter(',');
  cmd->add_option("--noise", o.noise, "Noise model")->check(CLI::IsMember({"interval", "sign"}));
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "markdown"}));
  cmd->add_option("--out", o.out, "Output file (default: stdout)");
}

void add_rule(CLI::App* cmd, Options& o) {
  cmd->add_option("--delta-ladder", o.ladder, "Noise levels, strictly decreasing")->delimiter(',');
  cmd->add_option("--rule", o.rule, "Parameter choice rule")
      ->check(CLI::IsMember({"apriori", "discrepancy"}));
  cmd->add_option("--kappa", o.kappa, "A priori exponent: alpha = c0 delta^kappa");
  cmd->add_option("--c0", o.c0, "A priori constant");
  cmd->add_option("--b", o.b, "Discrepancy factor");
  cmd->add_option("--theta", o.theta, "Discrepancy grid ratio");
  cmd->add_option("--alpha0", o.alpha0, "Discrepancy starting parameter");
  cmd->add_option("--max-steps", o.max_steps, "Discrepancy grid steps");
}

ExperimentConfig make_config(const Options& o, ExperimentConfig cfg) {
  cfg.problem.n = o.n;
  cfg.problem.q = o.q;
  cfg.problem.domain_radius = o.rho;
  cfg.problem.linear_coefficient = o.coefficient;
  cfg.source_kappa = o.source_kappa;
  if (!o.seeds.empty()) cfg.seeds = o.seeds;
  if (!o.ladder.empty()) cfg.delta_ladder = o.ladder;
  cfg.noise_model = o.noise == "interval" ? NoiseModel::UniformInterval : NoiseModel::RandomSign;
  cfg.output_format = o.format == "markdown" ? OutputFormat::Markdown : OutputFormat::Csv;
  cfg.output_path = o.out;
  if (o.rule == "apriori") {
    cfg.rule = APrioriRule{o.c0, o.kappa};
  } else if (o.rule == "discrepancy") {
    cfg.rule = DiscrepancyRule{o.b, o.theta, o.alpha0, o.max_steps};
  } else if (std::holds_alternative<APrioriRule>(cfg.rule)) {
    cfg.rule = APrioriRule{o.c0, o.kappa};
  } else {
    cfg.rule = DiscrepancyRule{o.b, o.theta, o.alpha0, o.max_steps};
  }
  validate(cfg.rule);
  validate(cfg);
  return cfg;
}

// Writes through a buffer so that a failed run never leaves a partial file.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidParameter("cannot open output file: " + path);
  file << text;
}

int run_tables(const Options& o, bool table1) {
  std::ostringstream buf;
  bool any_failed = false;
  if (table1) {
    ExperimentConfig cfg = make_config(o, default_table1_config());
    if (!std::holds_alternative<APrioriRule>(cfg.rule)) {
      throw InvalidParameter("table1 requires --rule apriori");
    }
    const auto rows = run_table1(cfg);
    write_table1(buf, rows, cfg.output_format);
    for (const auto& r : rows) any_failed = any_failed || r.failed;
  } else {
    ExperimentConfig cfg = make_config(o, default_table2_config());
    if (!std::holds_alternative<DiscrepancyRule>(cfg.rule)) {
      throw InvalidParameter("table2 requires --rule discrepancy");
    }
    const auto rows = run_table2(cfg);
    write_table2(buf, rows, cfg.output_format);
    for (const auto& r : rows) any_failed = any_failed || r.failed;
  }
  emit(o.out, buf.str());
  return any_failed ? kExitFailure : 0;
}

int run_solve(const Options& o) {
  const ExperimentConfig cfg = make_config(o, default_table1_config());
  const ProblemSpec p = build_paper_problem(cfg.problem);
  const NoisySample sample = generate_noise(p, o.delta, o.seed, cfg.noise_model);
  const RegResult r = minimize_tikhonov(p, sample.data, o.alpha);
  std::ostringstream buf;
  buf << "delta,alpha,misfit,penalty,tikhonov_value,error\n"
      << format_sci(o.delta) << ',' << format_sci(r.alpha) << ',' << format_sci(r.misfit) << ','
      << format_sci(r.penalty) << ',' << format_sci(r.tikhonov_value) << ','
      << format_sci((r.u - p.exact_solution).norm()) << '\n';
  emit(o.out, buf.str());
  return 0;
}

int run_check(const Options& o) {
  const ExperimentConfig cfg = make_config(o, default_table2_config());
  const auto results = run_invariant_suite(cfg);
  std::ostringstream buf;
  write_suite_report(buf, results);
  emit(o.out, buf.str());
  return all_passed(results) ? 0 : kExitFailure;
}

int run_aux(const Options& o) {
  const ExperimentConfig cfg = make_config(o, default_table1_config());
  const ProblemSpec p = build_paper_problem(cfg.problem);
  std::vector<double> alphas;
  for (int e = -1; e >= -10; --e) alphas.push_back(std::pow(10.0, e));
  std::ostringstream buf;
  write_aux_csv(buf, aux_diagnostics_grid(p, alphas, o.delta, o.seed));
  emit(o.out, buf.str());
  return 0;
}

int run_plot(const Options& o) {
  const bool discrepancy = o.rule == "discrepancy";
  std::vector<std::pair<double, double>> points;
  bool any_failed = false;
  if (discrepancy) {
    const auto rows = run_table2(make_config(o, default_table2_config()));
    for (const auto& r : rows) {
      points.emplace_back(r.delta, r.error);
      any_failed = any_failed || r.failed;
    }
  } else {
    const auto rows = run_table1(make_config(o, default_table1_config()));
    for (const auto& r : rows) {
      points.emplace_back(r.delta, r.error);
      any_failed = any_failed || r.failed;
    }
  }
  std::ostringstream buf;
  write_plot_data(buf, points);
  emit(o.out, buf.str());
  return any_failed ? kExitFailure : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tikhonov regularization with oversmoothing penalties in Hilbert scales"};
  app.require_subcommand(1);
  Options o;

  auto* t1 = app.add_subcommand("table1", "A priori choice alpha = c0 delta^kappa over a delta ladder");
  auto* t2 = app.add_subcommand("table2", "Sequential discrepancy principle over a delta ladder");
  auto* solve = app.add_subcommand("solve", "Single Tikhonov solve at (delta, alpha)");
  auto* check = app.add_subcommand("check", "Run the invariant suite");
  auto* aux = app.add_subcommand("aux-diagnostics", "Rate functions and bound over an alpha grid");
  auto* plot = app.add_subcommand("plot-data", "(delta, error) pairs for plotting");

  for (auto* cmd : {t1, t2, solve, check, aux, plot}) add_common(cmd, o);
  for (auto* cmd : {t1, t2, plot, check}) add_rule(cmd, o);
  for (auto* cmd : {solve, aux}) {
    cmd->add_option("--delta", o.delta, "Noise level");
    cmd->add_option("--seed", o.seed, "Noise seed");
  }
  solve->add_option("--alpha", o.alpha, "Regularization parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*t1) return run_tables(o, true);
    if (*t2) return run_tables(o, false);
    if (*solve) return run_solve(o);
    if (*check) return run_check(o);
    if (*aux) return run_aux(o);
    if (*plot) return run_plot(o);
  } catch (const InvalidParameter& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitConfig;
}
