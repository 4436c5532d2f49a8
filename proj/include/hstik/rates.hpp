#pragma once

#include <utility>
#include <vector>

#include "hstik/hilbert_scale.hpp"
#include "hstik/model.hpp"

namespace hstik {

/// Logarithmic index function phi(t) = (-ln t)^{-kappa} on (0, cutoff].
struct IndexFunction {
  double kappa = 1.8;
  double cutoff = 0.9;
};

/// Throws DomainError for t outside (0, cutoff].
double phi_eval(const IndexFunction& f, double t);

struct QualificationEntry {
  double alpha = 0.0;
  /// sup_lambda alpha lambda^theta phi(lambda) / (lambda + alpha), divided
  /// by alpha^theta phi(alpha).
  double ratio = 0.0;
  bool pass = false;
};

struct QualificationReport {
  std::vector<QualificationEntry> entries;
  double worst_ratio = 0.0;
  bool all_pass = true;
};

/// Checks sup over the spectrum points g_n <= cutoff of
///   alpha lambda^theta phi(lambda) / (lambda + alpha) <= C alpha^theta phi(alpha)
/// for each alpha of the grid. Throws InvalidParameter for theta outside
/// [0, 1) and DomainError for grid points above the cutoff.
QualificationReport qualification_check(const IndexFunction& f, const DiagonalScale& scale,
                                        double theta, const std::vector<double>& alpha_grid,
                                        double C);

/// psi(alpha) = phi(alpha) alpha^{a/(2a+2)}.
double psi_eval(const IndexFunction& f, double degree_a, double alpha);

struct PsiInversion {
  double alpha = 0.0;
  int iterations = 0;
};

/// alpha with |psi(alpha) - delta| <= 1e-12 delta, by bisection in
/// log(alpha). Throws OutOfRangeError for delta > psi(cutoff) or delta <= 0.
PsiInversion psi_inverse_detailed(const IndexFunction& f, double degree_a, double delta);
double psi_inverse(const IndexFunction& f, double degree_a, double delta);

/// error / phi(delta) per (delta, error) row.
std::vector<double> rate_ratio(const std::vector<std::pair<double, double>>& errors,
                               const IndexFunction& f);

/// max over the grid of f9(alpha) / phi(alpha); an empirical K0.
double calibrate_K0(const ProblemSpec& p, const IndexFunction& f,
                    const std::vector<double>& alpha_grid);

/// K0 phi(alpha) + K2 delta / alpha^{a/(2a+2)}.
double log_rate_bound(const ProblemSpec& p, const IndexFunction& f, double K0, double alpha,
                      double delta);

}  // namespace hstik
