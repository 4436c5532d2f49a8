#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "hstik/auxiliary.hpp"
#include "hstik/errors.hpp"
#include "hstik/solver.hpp"

using namespace hstik;

TEST(Auxiliary, FirstCoordinateHalf) {
  const ProblemSpec p = build_paper_problem(100);
  EXPECT_DOUBLE_EQ(auxiliary_element(p, 1.0)[0], 0.5);
}

TEST(Auxiliary, FixedPointWhenGuessIsSolution) {
  ProblemSpec p = build_paper_problem(100);
  p.initial_guess = p.exact_solution;
  for (double alpha : {1.0, 1e-4, 1e-12}) EXPECT_EQ(auxiliary_element(p, alpha), p.exact_solution);
}

TEST(Auxiliary, RateFunctionsDecrease) {
  const ProblemSpec p = build_paper_problem(6000);
  EXPECT_LT(rate_functions(p, 1e-4).f1, rate_functions(p, 1e-2).f1);
}

TEST(Auxiliary, DirectSumsReproduceRateFunctions) {
  const ProblemSpec p = build_paper_problem(500);
  const double alpha = 1e-5;
  long double s1 = 0, s2 = 0, s3 = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const long double n = i + 1.0L;
    const long double g = 1.0L / (n * n * n * n);
    const long double r = alpha / (g + alpha) * p.exact_solution[i];
    s1 += r * r;
    s2 += (r / n) * (r / n);
    s3 += (r / (n * n * n)) * (r / (n * n * n));
  }
  const AuxDiagnostics d = rate_functions(p, alpha);
  EXPECT_NEAR(d.f1, std::sqrt(static_cast<double>(s1)), 1e-13);
  EXPECT_NEAR(d.f2, std::sqrt(static_cast<double>(s2)) / std::pow(alpha, 0.25), 1e-12);
  EXPECT_NEAR(d.f3, std::sqrt(static_cast<double>(s3)) / std::pow(alpha, 0.75), 1e-12);
  EXPECT_TRUE(d.aux_in_domain);
  EXPECT_DOUBLE_EQ(d.f4, p.c_b * d.f2 + d.f3);
  EXPECT_DOUBLE_EQ(d.K1, 2.0);
  EXPECT_DOUBLE_EQ(d.K2, 2.0);
}

TEST(Auxiliary, NoiseTermAtSquaredAlpha) {
  const ProblemSpec p = build_paper_problem(100);
  for (double delta : {1e-2, 1e-4, 1e-6}) {
    EXPECT_NEAR(error_bound_noise_term(p, delta * delta, delta), 2.0 * std::sqrt(delta),
                1e-14);
  }
  EXPECT_DOUBLE_EQ(error_bound(p, 1e-3, 0.0), rate_functions(p, 1e-3).bound_f9);
  EXPECT_LT(error_bound(p, 1e-10, 0.0), error_bound(p, 1e-2, 0.0));
}

TEST(Auxiliary, BoundDominatesMeasuredError) {
  const ProblemSpec p = build_paper_problem(2000);
  for (double delta : {1e-3, 1e-4}) {
    const NoisySample s = generate_noise(p, delta, 17);
    const RegResult r = minimize_tikhonov(p, s.data, delta * delta);
    EXPECT_LE((r.u - p.exact_solution).norm(), error_bound(p, delta * delta, delta));
  }
}

TEST(Auxiliary, CsvHeader) {
  const ProblemSpec p = build_paper_problem(50);
  std::ostringstream out;
  write_aux_csv(out, aux_diagnostics_grid(p, {1e-1, 1e-2}, 1e-3, 1));
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')),
            "alpha,f1,f2,f3,f4,f9,bound,measured_error");
}

TEST(Auxiliary, ErrorPaths) {
  const ProblemSpec p = build_paper_problem(50);
  EXPECT_THROW(auxiliary_element(p, 0.0), InvalidParameter);
  EXPECT_THROW(rate_functions(p, -1.0), InvalidParameter);
  EXPECT_THROW(error_bound(p, 1e-2, -1.0), InvalidParameter);
}
