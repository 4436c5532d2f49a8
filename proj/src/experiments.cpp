#include "hstik/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "hstik/errors.hpp"
#include "hstik/format.hpp"
#include "hstik/solver.hpp"

namespace hstik {

namespace {

std::vector<double> halving_ladder(double start, int count) {
  std::vector<double> ladder;
  for (int k = 0; k < count; ++k) ladder.push_back(std::ldexp(start, -k));
  return ladder;
}

const char* status_of(bool failed) { return failed ? "failed" : "ok"; }

// Markdown cells use three significant digits like the published tables.
std::string md(double value) {
  if (std::isnan(value)) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", value);
  return buf;
}

std::string md_fixed(double value, const char* fmt) {
  if (std::isnan(value)) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, sep)) cells.push_back(cell);
  if (!line.empty() && line.back() == sep) cells.emplace_back();
  return cells;
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  if (cfg.problem.n < 2) throw InvalidParameter("config: N must be at least 2");
  if (cfg.seeds.empty()) throw InvalidParameter("config: at least one seed is required");
  for (std::size_t i = 0; i < cfg.delta_ladder.size(); ++i) {
    if (!(cfg.delta_ladder[i] >= 0.0)) throw InvalidParameter("config: noise levels must be >= 0");
    if (i > 0 && !(cfg.delta_ladder[i] < cfg.delta_ladder[i - 1])) {
      throw InvalidParameter("config: delta ladder must be strictly decreasing");
    }
  }
  validate(cfg.rule);
}

std::vector<double> default_table1_ladder() { return halving_ladder(8e-3, 13); }
std::vector<double> default_table2_ladder() { return halving_ladder(1e-3, 10); }

ExperimentConfig default_table1_config() {
  ExperimentConfig cfg;
  cfg.delta_ladder = default_table1_ladder();
  cfg.rule = APrioriRule{1.0, 2.0};
  return cfg;
}

ExperimentConfig default_table2_config() {
  ExperimentConfig cfg;
  cfg.delta_ladder = default_table2_ladder();
  cfg.rule = DiscrepancyRule{};
  return cfg;
}

std::uint64_t row_seed(std::uint64_t seed, std::size_t row) { return seed + row; }

std::vector<Table1Row> run_table1(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto* rule = std::get_if<APrioriRule>(&cfg.rule);
  if (rule == nullptr) throw InvalidParameter("run_table1: requires an a priori rule");

  const ProblemSpec p = build_paper_problem(cfg.problem);
  const double data_norm = exact_data(p).norm();
  const IndexFunction phi{cfg.source_kappa, 0.9};

  std::vector<Table1Row> rows;
  for (std::size_t r = 0; r < cfg.delta_ladder.size(); ++r) {
    Table1Row row;
    row.delta = cfg.delta_ladder[r];
    row.percent_noise = 100.0 * row.delta / data_norm;
    try {
      row.alpha = row.delta > 0.0 ? choose_apriori(row.delta, *rule) : kNoiseFreeAlphaFloor;
      double sum = 0.0;
      for (std::uint64_t seed : cfg.seeds) {
        const NoisySample sample = generate_noise(p, row.delta, row_seed(seed, r), cfg.noise_model);
        sum += (minimize_tikhonov(p, sample.data, row.alpha).u - p.exact_solution).norm();
      }
      row.error = sum / static_cast<double>(cfg.seeds.size());
      row.ratio = row.delta > 0.0 && row.delta <= phi.cutoff
                      ? row.error / phi_eval(phi, row.delta)
                      : std::numeric_limits<double>::quiet_NaN();
    } catch (const Error& e) {
      row.failed = true;
      row.message = e.what();
      row.error = row.ratio = std::numeric_limits<double>::quiet_NaN();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Table2Row> run_table2(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto* rule = std::get_if<DiscrepancyRule>(&cfg.rule);
  if (rule == nullptr) throw InvalidParameter("run_table2: requires a discrepancy rule");

  const ProblemSpec p = build_paper_problem(cfg.problem);
  const double data_norm = exact_data(p).norm();
  const double a = p.scale.degree_a();
  const double nan = std::numeric_limits<double>::quiet_NaN();

  std::vector<Table2Row> rows;
  for (std::size_t r = 0; r < cfg.delta_ladder.size(); ++r) {
    Table2Row row;
    row.delta = cfg.delta_ladder[r];
    row.percent_noise = 100.0 * row.delta / data_norm;
    try {
      double sum = 0.0;
      std::map<double, int> votes;
      for (std::uint64_t seed : cfg.seeds) {
        const NoisySample sample = generate_noise(p, row.delta, row_seed(seed, r), cfg.noise_model);
        const ChoiceOutcome outcome = choose_discrepancy(p, sample, *rule);
        sum += (outcome.result.u - p.exact_solution).norm();
        row.alphas_per_seed.push_back(outcome.alpha_selected);
        ++votes[outcome.alpha_selected];
      }
      row.error = sum / static_cast<double>(cfg.seeds.size());
      // std::map iterates ascending, so ties resolve to the smaller alpha.
      int best = 0;
      for (const auto& [alpha, count] : votes) {
        if (count > best) {
          best = count;
          row.alpha = alpha;
        }
      }
      row.noise_ratio = row.delta / std::pow(row.alpha, a / (2.0 * a + 2.0));
      row.delta_sq_over_alpha = row.delta * row.delta / row.alpha;
    } catch (const Error& e) {
      row.failed = true;
      row.message = e.what();
      row.error = row.alpha = row.noise_ratio = row.delta_sq_over_alpha = nan;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_table1(std::ostream& out, const std::vector<Table1Row>& rows, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "delta,percent_noise,error,ratio,alpha,status\n";
    for (const auto& r : rows) {
      out << format_sci(r.delta) << ',' << format_sci(r.percent_noise) << ','
          << format_sci(r.error) << ',' << format_sci(r.ratio) << ',' << format_sci(r.alpha) << ','
          << status_of(r.failed) << '\n';
    }
    return;
  }
  out << "| delta | 100*delta/||f|| | ||u - u*|| | ||u - u*|| / phi(delta) |\n"
      << "|---|---|---|---|\n";
  for (const auto& r : rows) {
    out << "| " << md(r.delta) << " | " << md(r.percent_noise) << " | "
        << (r.failed ? std::string("failed") : md(r.error)) << " | " << md_fixed(r.ratio, "%.4f")
        << " |\n";
  }
}

void write_table2(std::ostream& out, const std::vector<Table2Row>& rows, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << "delta,percent_noise,error,alpha,noise_ratio,delta_sq_over_alpha,status\n";
    for (const auto& r : rows) {
      out << format_sci(r.delta) << ',' << format_sci(r.percent_noise) << ','
          << format_sci(r.error) << ',' << format_sci(r.alpha) << ',' << format_sci(r.noise_ratio)
          << ',' << format_sci(r.delta_sq_over_alpha) << ',' << status_of(r.failed) << '\n';
    }
    return;
  }
  out << "| delta | 100*delta/||f|| | ||u - u*|| | alpha | delta/alpha^(1/4) | delta^2/alpha |\n"
      << "|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out << "| " << md(r.delta) << " | " << md(r.percent_noise) << " | "
        << (r.failed ? std::string("failed") : md(r.error)) << " | " << md(r.alpha) << " | "
        << md(r.noise_ratio) << " | " << md_fixed(r.delta_sq_over_alpha, "%.2f") << " |\n";
  }
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw InvalidParameter("read_csv: empty document");
  table.header = split(line, ',');
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (cells.size() != table.header.size()) {
      throw InvalidParameter("read_csv: row width does not match header");
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

void write_plot_data(std::ostream& out, const std::vector<std::pair<double, double>>& points) {
  out << "delta,error\n";
  for (const auto& [delta, error] : points) {
    out << format_sci(delta) << ',' << format_sci(error) << '\n';
  }
}

}  // namespace hstik
