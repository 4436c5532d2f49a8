#include <gtest/gtest.h>

#include <cmath>

#include "hstik/auxiliary.hpp"
#include "hstik/errors.hpp"
#include "hstik/rates.hpp"

using namespace hstik;

namespace {

std::vector<double> decades(int from, int to) {
  std::vector<double> grid;
  for (int e = from; e >= to; --e) grid.push_back(std::pow(10.0, e));
  return grid;
}

}  // namespace

TEST(Rates, PhiValues) {
  const IndexFunction f{};
  EXPECT_DOUBLE_EQ(phi_eval({3.7, 0.9}, std::exp(-1.0)), 1.0);
  // (ln 1000)^{-1.8} = 0.0308456...; the published row gives 3.12e-2 / 1.0101.
  EXPECT_NEAR(phi_eval(f, 1e-3), 0.030845619844880986, 1e-15);
  EXPECT_NEAR(phi_eval(f, 1e-3), 3.12e-2 / 1.0101, 1e-4);
  EXPECT_NEAR(phi_eval(f, 1.0 / 16.0), 0.15951671069957749, 1e-15);
  EXPECT_THROW(phi_eval(f, 0.0), DomainError);
  EXPECT_THROW(phi_eval(f, 0.95), DomainError);
}

TEST(Rates, Qualification) {
  const IndexFunction f{};
  const DiagonalScale sc = DiagonalScale::identity_index(6000, 1.0);
  for (double theta : {0.0, 0.25, 0.5}) {
    EXPECT_TRUE(qualification_check(f, sc, theta, decades(-2, -8), 1.0).all_pass) << theta;
  }
  EXPECT_FALSE(qualification_check(f, sc, 0.0, decades(-2, -8), 1e-3).all_pass);
  EXPECT_THROW(qualification_check(f, sc, 1.0, decades(-2, -8), 1.0), InvalidParameter);
}

TEST(Rates, PsiInverse) {
  const IndexFunction f{};
  const PsiInversion inv = psi_inverse_detailed(f, 1.0, 1e-3);
  EXPECT_NEAR(psi_eval(f, 1.0, inv.alpha), 1e-3, 1e-15);
  EXPECT_LE(inv.iterations, 200);
  // Independent bisection reference.
  EXPECT_NEAR(inv.alpha, 2.44328272197448e-05, 1e-15);
  EXPECT_THROW(psi_inverse(f, 1.0, 0.0), OutOfRangeError);
  EXPECT_THROW(psi_inverse(f, 1.0, 100.0), OutOfRangeError);
}

TEST(Rates, RateRatio) {
  const IndexFunction f{};
  const auto r = rate_ratio({{8e-3, 5.16e-2}, {1e-3, phi_eval(f, 1e-3)}}, f);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0], 0.8786, 1e-3);
  EXPECT_DOUBLE_EQ(r[1], 1.0);
}

TEST(Rates, CalibratedBoundOnDisjointGrid) {
  const IndexFunction f{};
  const ProblemSpec p = build_paper_problem(6000);
  const double K0 = calibrate_K0(p, f, decades(-2, -11));
  EXPECT_GT(K0, 0.0);
  for (double e = -2.5; e >= -10.5; e -= 1.0) {
    const double alpha = std::pow(10.0, e);
    EXPECT_GE(log_rate_bound(p, f, K0, alpha, 0.0), rate_functions(p, alpha).bound_f9) << alpha;
  }
}
