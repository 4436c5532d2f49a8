#include <gtest/gtest.h>
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "hstik/errors.hpp"
#include "hstik/experiments.hpp"
#include "hstik/format.hpp"
#include "hstik/invariants.hpp"

using namespace hstik;

namespace {

ExperimentConfig small_table1() {
  ExperimentConfig cfg = default_table1_config();
  cfg.problem.n = 400;
  cfg.delta_ladder = {8e-3, 1e-3, 1.25e-4};
  cfg.seeds = {1, 2};
  return cfg;
}

std::string table1_csv(const ExperimentConfig& cfg) {
  std::ostringstream out;
  write_table1(out, run_table1(cfg), OutputFormat::Csv);
  return out.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HSTIK_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Config, Validation) {
  ExperimentConfig cfg = small_table1();
  cfg.delta_ladder = {1e-3, 1e-2};
  EXPECT_THROW(validate(cfg), InvalidParameter);
  cfg = small_table1();
  cfg.seeds.clear();
  EXPECT_THROW(validate(cfg), InvalidParameter);
  cfg = small_table1();
  cfg.problem.n = 1;
  EXPECT_THROW(validate(cfg), InvalidParameter);
  cfg = small_table1();
  cfg.rule = DiscrepancyRule{};
  EXPECT_THROW(run_table1(cfg), InvalidParameter);
}

TEST(Config, DefaultLadders) {
  const auto t1 = default_table1_ladder();
  ASSERT_EQ(t1.size(), 13u);
  EXPECT_DOUBLE_EQ(t1.front(), 8e-3);
  EXPECT_NEAR(t1.back(), 1.95e-6, 0.01e-6);
  const auto t2 = default_table2_ladder();
  ASSERT_EQ(t2.size(), 10u);
  EXPECT_DOUBLE_EQ(t2.front(), 1e-3);
  EXPECT_NEAR(t2.back(), 1.95e-6, 0.01e-6);
}

TEST(Report, Deterministic) {
  const ExperimentConfig cfg = small_table1();
  EXPECT_EQ(table1_csv(cfg), table1_csv(cfg));
  ExperimentConfig other = cfg;
  other.seeds = {3, 4};
  EXPECT_NE(table1_csv(cfg), table1_csv(other));
}

TEST(Report, CsvRoundTrip) {
  ExperimentConfig cfg = small_table1();
  cfg.delta_ladder.push_back(0.0);
  const auto rows = run_table1(cfg);
  std::istringstream in(table1_csv(cfg));
  const CsvTable table = read_csv(in);
  ASSERT_EQ(table.header,
            (std::vector<std::string>{"delta", "percent_noise", "error", "ratio", "alpha", "status"}));
  ASSERT_EQ(table.rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double expected[] = {rows[i].delta, rows[i].percent_noise, rows[i].error, rows[i].ratio,
                               rows[i].alpha};
    for (std::size_t c = 0; c < 5; ++c) {
      const double parsed = parse_number(table.rows[i][c]);
      const double rounded = parse_number(format_sci(expected[c]));
      if (std::isnan(expected[c])) {
        EXPECT_TRUE(std::isnan(parsed));
      } else {
        EXPECT_EQ(parsed, rounded) << "row " << i << " column " << c;
        EXPECT_NEAR(parsed, expected[c], 5e-7 * std::abs(expected[c]));
      }
    }
  }
}

TEST(Report, NoiseFreeRowBelowSmallestNoise) {
  ExperimentConfig cfg = small_table1();
  cfg.problem.n = 6000;
  cfg.delta_ladder = {1.953125e-6, 0.0};
  const auto rows = run_table1(cfg);
  EXPECT_DOUBLE_EQ(rows[1].alpha, kNoiseFreeAlphaFloor);
  EXPECT_TRUE(std::isnan(rows[1].ratio));
  EXPECT_LT(rows[1].error, rows[0].error);
}

TEST(Report, PercentNoiseColumn) {
  ExperimentConfig cfg = small_table1();
  cfg.problem.n = 6000;
  cfg.delta_ladder = {8e-3};
  EXPECT_NEAR(run_table1(cfg)[0].percent_noise, 7.41e-2, 0.005e-2);
}

TEST(Report, MarkdownLayout) {
  std::ostringstream out;
  write_table1(out, run_table1(small_table1()), OutputFormat::Markdown);
  EXPECT_EQ(out.str().rfind("|", 0), 0u);
  EXPECT_NE(out.str().find("---"), std::string::npos);
}

TEST(Suite, QuickModeUnderFiveSeconds) {
  ExperimentConfig cfg = default_table2_config();
  cfg.problem.n = 50;
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_invariant_suite(cfg);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(all_passed(results));
  EXPECT_LT(seconds, 5.0);
}

TEST(Suite, DefaultConfigPasses) {
  const auto results = run_invariant_suite(default_table2_config());
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.module << "/" << r.name << ": " << r.detail;
}

TEST(Suite, InvertedParameterSolverIsCaught) {
  ExperimentConfig cfg = default_table2_config();
  cfg.problem.n = 200;
  SuiteOptions options;
  options.solve = [](const ProblemSpec& p, const SeqVector& f, double alpha) {
    return make_result(p, f, alpha, minimize_tikhonov(p, f, 1.0 / alpha).u);
  };
  const auto results = run_invariant_suite(cfg, options);
  EXPECT_FALSE(all_passed(results));
  bool misfit_flagged = false;
  for (const auto& r : results) {
    if (r.name == "misfit_monotone") misfit_flagged = !r.passed;
  }
  EXPECT_TRUE(misfit_flagged);
}

TEST(Suite, ReportFormat) {
  std::ostringstream out;
  write_suite_report(out, {{"m", "p", true, "a, b"}, {"m", "q", false, ""}});
  EXPECT_EQ(out.str(), "module,property,status,detail\nm,p,pass,a; b\nm,q,FAIL,\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("check --n 50"), 0);
  EXPECT_EQ(run_cli("solve --n 100 --delta 1e-3 --alpha 1e-6"), 0);
  EXPECT_EQ(run_cli("table1 --n 100 --delta-ladder 1e-3,1e-2"), 2);
  EXPECT_EQ(run_cli("table1 --n 1"), 2);
  EXPECT_EQ(run_cli("table2 --rule apriori --n 100"), 2);
  EXPECT_EQ(run_cli("solve --alpha 0"), 2);
  EXPECT_EQ(run_cli("table2 --n 100 --delta-ladder 1e-3 --max-steps 1"), 1);
  EXPECT_EQ(run_cli("no-such-command"), 2);
}

TEST(Cli, OutputFileIsByteIdentical) {
  const std::string a = testing::TempDir() + "/t1_a.csv";
  const std::string b = testing::TempDir() + "/t1_b.csv";
  const std::string args = "table1 --n 300 --seeds 1,2 --delta-ladder 8e-3,1e-3 --out ";
  ASSERT_EQ(run_cli(args + a), 0);
  ASSERT_EQ(run_cli(args + b), 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_FALSE(sa.str().empty());
  EXPECT_EQ(sa.str(), sb.str());
}
