#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "hstik/errors.hpp"
#include "hstik/hilbert_scale.hpp"
#include "hstik/model.hpp"

using namespace hstik;

namespace {

DiagonalScale scale(std::size_t n) { return DiagonalScale::identity_index(n, 1.0); }

}  // namespace

TEST(HilbertScale, NormOfUnitVector) {
  const SeqVector e2 = SeqVector::unit(5, 1);
  EXPECT_DOUBLE_EQ(norm_tau(scale(5), e2, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(norm_tau(scale(5), e2, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(norm_tau(scale(5), e2, -2.0), 0.25);
}

TEST(HilbertScale, ExactSolutionNorm) {
  // Direct summation in long double as an independent reference.
  const std::size_t n = 6000;
  long double sum = 1.0L;
  for (std::size_t k = 2; k <= n; ++k) {
    const long double v = 1.0L / (std::sqrt(static_cast<long double>(k)) *
                                  std::pow(std::log(static_cast<long double>(k)), 2.31L));
    sum += v * v;
  }
  const ProblemSpec p = build_paper_problem(n);
  const double norm = norm_tau(p.scale, p.exact_solution, 0.0);
  EXPECT_NEAR(norm, static_cast<double>(std::sqrt(sum)), 1e-12);
  EXPECT_NEAR(norm, 2.0128, 5e-3);
  EXPECT_LE(norm, p.domain_radius);
}

TEST(HilbertScale, ApplyBPower) {
  const auto s = scale(4);
  const SeqVector half = apply_B_power(s, SeqVector::unit(4, 1), -1.0);
  EXPECT_EQ(half, 0.5 * SeqVector::unit(4, 1));
  const SeqVector g3 = apply_B_power(s, SeqVector::unit(4, 2), -s.smoothing_exponent());
  EXPECT_NEAR(g3[2], 1.0 / 81.0, 1e-17);
  EXPECT_EQ(g3[0], 0.0);
}

TEST(HilbertScale, GFilter) {
  const auto s = scale(3);
  const SeqVector out = apply_G_filter(s, SeqVector::unit(3, 0), 1.0);
  EXPECT_DOUBLE_EQ(out[0], 0.5);
  const SeqVector large = apply_G_filter(s, SeqVector(3, 1.0), 1e300);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_LT(large[i], 1e-299);
  EXPECT_THROW(apply_G_filter(s, SeqVector(3, 1.0), 0.0), InvalidParameter);
  EXPECT_THROW(apply_G_filter(s, SeqVector(3, 1.0), -1.0), InvalidParameter);
}

TEST(HilbertScale, SpectrumInUnitInterval) {
  const auto s = scale(100);
  const auto g = s.g_spectrum();
  EXPECT_DOUBLE_EQ(g.front(), 1.0);
  for (std::size_t i = 1; i < g.size(); ++i) {
    EXPECT_GT(g[i], 0.0);
    EXPECT_LT(g[i], g[i - 1]);
  }
  EXPECT_DOUBLE_EQ(s.lower_bound(), 1.0);
}

TEST(HilbertScale, InvalidConstruction) {
  EXPECT_THROW(DiagonalScale({}, 1.0), InvalidParameter);
  EXPECT_THROW(DiagonalScale({1.0, 0.0}, 1.0), InvalidParameter);
  EXPECT_THROW(DiagonalScale({1.0, 2.0}, 0.0), InvalidParameter);
  EXPECT_THROW(SeqVector(std::vector<double>{1.0, std::nan("")}), InvalidParameter);
  EXPECT_THROW(SeqVector::unit(3, 3), InvalidParameter);
}

TEST(HilbertScale, OverflowAndMismatch) {
  const auto s = scale(3);
  EXPECT_THROW(norm_tau(s, SeqVector(3, 1e300), 200.0), OverflowError);
  EXPECT_THROW(norm_tau(s, SeqVector(2, 1.0), 0.0), InvalidParameter);
}
