#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hstik/model.hpp"
#include "hstik/param_choice.hpp"
#include "hstik/rates.hpp"

namespace hstik {

enum class OutputFormat { Csv, Markdown };

struct ExperimentConfig {
  PaperProblemParams problem;
  /// kappa of the logarithmic index function used in the ratio column.
  double source_kappa = 1.8;
  std::vector<double> delta_ladder;
  ChoiceRule rule = APrioriRule{};
  std::vector<std::uint64_t> seeds = {1000, 2000, 3000, 4000, 5000};
  /// Perturbations of full magnitude delta/sqrt(N) with random signs
  /// reproduce the published discrepancy-principle selections row for row.
  NoiseModel noise_model = NoiseModel::RandomSign;
  OutputFormat output_format = OutputFormat::Csv;
  /// Empty means standard output.
  std::string output_path;
};

/// Throws InvalidParameter on N < 2, an empty seed list, or a ladder that
/// is not strictly decreasing / has negative entries.
void validate(const ExperimentConfig& cfg);

/// 8e-3 halved twelve times (13 values).
std::vector<double> default_table1_ladder();
/// 1e-3 halved nine times (10 values).
std::vector<double> default_table2_ladder();

ExperimentConfig default_table1_config();
ExperimentConfig default_table2_config();

/// Seed used for ladder row `row` under base seed `seed`.
std::uint64_t row_seed(std::uint64_t seed, std::size_t row);

struct Table1Row {
  double delta = 0.0;
  /// 100 delta / ||f*||
  double percent_noise = 0.0;
  /// Seed-averaged ||u_alpha^delta - u*||.
  double error = 0.0;
  /// error / phi(delta); NaN for delta = 0.
  double ratio = 0.0;
  double alpha = 0.0;
  bool failed = false;
  std::string message;
};

struct Table2Row {
  double delta = 0.0;
  double percent_noise = 0.0;
  /// Seed-averaged error at the per-seed selected parameter.
  double error = 0.0;
  /// Most frequent selection across seeds (ties: the smaller alpha).
  double alpha = 0.0;
  /// delta / alpha^{a/(2a+2)}
  double noise_ratio = 0.0;
  /// delta^2 / alpha
  double delta_sq_over_alpha = 0.0;
  /// Per-seed selections, in seed order.
  std::vector<double> alphas_per_seed;
  bool failed = false;
  std::string message;
};

/// Smallest alpha used by the a priori table when delta = 0.
inline constexpr double kNoiseFreeAlphaFloor = 1e-12;

/// A priori rule over the ladder. Requires cfg.rule to hold APrioriRule.
std::vector<Table1Row> run_table1(const ExperimentConfig& cfg);

/// Sequential discrepancy principle over the ladder. Requires
/// cfg.rule to hold DiscrepancyRule and every delta > 0.
std::vector<Table2Row> run_table2(const ExperimentConfig& cfg);

void write_table1(std::ostream& out, const std::vector<Table1Row>& rows, OutputFormat format);
void write_table2(std::ostream& out, const std::vector<Table2Row>& rows, OutputFormat format);

/// Header plus data rows of a CSV document, cells kept as text.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(std::istream& in);

/// (delta, error) pairs for external plotting.
void write_plot_data(std::ostream& out, const std::vector<std::pair<double, double>>& points);

}  // namespace hstik
