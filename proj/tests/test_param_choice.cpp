#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "hstik/errors.hpp"
#include "hstik/param_choice.hpp"

using namespace hstik;

TEST(APriori, Values) {
  EXPECT_NEAR(choose_apriori(1e-3, {1.0, 2.0}), 1e-6, 1e-20);
  EXPECT_DOUBLE_EQ(choose_apriori(0.01, {1.0, 1.0}), 0.01);
  EXPECT_THROW(choose_apriori(0.0, {}), InvalidParameter);
  EXPECT_THROW(validate(ChoiceRule{APrioriRule{0.0, 2.0}}), InvalidParameter);
  EXPECT_THROW(validate(ChoiceRule{APrioriRule{1.0, -1.0}}), InvalidParameter);
}

TEST(APriori, KappaClassification) {
  EXPECT_EQ(classify_kappa(1.0, 1.0), KappaRegime::BelowTwo);
  EXPECT_EQ(classify_kappa(2.0, 1.0), KappaRegime::Two);
  EXPECT_EQ(classify_kappa(3.0, 1.0), KappaRegime::AboveTwo);
  EXPECT_EQ(classify_kappa(4.0, 1.0), KappaRegime::Borderline);
  EXPECT_EQ(classify_kappa(5.0, 1.0), KappaRegime::Divergent);
  const APrioriChoice border = choose_apriori_flagged(1e-3, {1.0, 4.0}, 1.0);
  EXPECT_TRUE(border.warning);
  EXPECT_EQ(border.regime, KappaRegime::Borderline);
  EXPECT_FALSE(choose_apriori_flagged(1e-3, {1.0, 2.0}, 1.0).warning);
}

TEST(Discrepancy, FirstTableRow) {
  const ProblemSpec p = build_paper_problem(6000);
  for (std::uint64_t seed : {1000u, 2000u, 3000u}) {
    const NoisySample s = generate_noise(p, 1e-3, seed, NoiseModel::RandomSign);
    const ChoiceOutcome out = choose_discrepancy(p, s, DiscrepancyRule{});
    EXPECT_NEAR(std::log10(out.alpha_selected), -5.0, 1e-12);
    EXPECT_EQ(out.branch, ChoiceBranch::DescendingGrid);
    EXPECT_LE(out.result.misfit, 4e-3);
    EXPECT_GT(out.misfit_partner, 4e-3);
    EXPECT_DOUBLE_EQ(out.alpha_partner, 10.0 * out.alpha_selected);
  }
}

TEST(Discrepancy, InfiniteAlphaWhenGuessFitsData) {
  const ProblemSpec p = build_paper_problem(100);
  const NoisySample s{forward(p, p.initial_guess), 1e-3, 0};
  const ChoiceOutcome out = choose_discrepancy(p, s, DiscrepancyRule{});
  EXPECT_EQ(out.branch, ChoiceBranch::InfiniteAlpha);
  EXPECT_TRUE(out.result.infinite_alpha());
  EXPECT_EQ(out.result.u, p.initial_guess);
}

TEST(Discrepancy, AscendingBranch) {
  // Starting far below the crossing forces the upward search.
  const ProblemSpec p = build_paper_problem(500);
  const NoisySample s = generate_noise(p, 1e-2, 4, NoiseModel::RandomSign);
  const ChoiceOutcome down = choose_discrepancy(p, s, DiscrepancyRule{});
  const ChoiceOutcome up = choose_discrepancy(p, s, DiscrepancyRule{.alpha0 = 1e-12});
  EXPECT_EQ(up.branch, ChoiceBranch::AscendingGrid);
  EXPECT_NEAR(std::log10(up.alpha_selected), std::log10(down.alpha_selected), 1e-9);
}

TEST(Discrepancy, ErrorPaths) {
  const ProblemSpec p = build_paper_problem(100);
  const NoisySample s = generate_noise(p, 1e-3, 1);
  EXPECT_THROW(choose_discrepancy(p, NoisySample{s.data, 0.0, 0}, {}), InvalidParameter);
  EXPECT_THROW(choose_discrepancy(p, s, DiscrepancyRule{.max_steps = 1}), NoCrossingError);
  EXPECT_THROW(validate(ChoiceRule{DiscrepancyRule{.b = 1.0}}), InvalidParameter);
  EXPECT_THROW(validate(ChoiceRule{DiscrepancyRule{.theta = 1.0}}), InvalidParameter);
  EXPECT_THROW(validate(ChoiceRule{DiscrepancyRule{.alpha0 = 0.0}}), InvalidParameter);
  EXPECT_THROW(validate(ChoiceRule{DiscrepancyRule{.max_steps = 0}}), InvalidParameter);
}
