#include "hstik/rates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hstik/auxiliary.hpp"
#include "hstik/errors.hpp"

namespace hstik {

namespace {

constexpr int kMaxPsiIterations = 200;
constexpr double kPsiTolerance = 1e-12;
// ln of the smallest alpha the bisection considers (about 1e-304).
constexpr double kLogAlphaFloor = -700.0;

}  // namespace

double phi_eval(const IndexFunction& f, double t) {
  if (!(t > 0.0) || t > f.cutoff) {
    throw DomainError("phi_eval: t = " + std::to_string(t) + " outside (0, " +
                      std::to_string(f.cutoff) + "]");
  }
  return std::pow(-std::log(t), -f.kappa);
}

QualificationReport qualification_check(const IndexFunction& f, const DiagonalScale& scale,
                                        double theta, const std::vector<double>& alpha_grid,
                                        double C) {
  if (!(theta >= 0.0 && theta < 1.0)) {
    throw InvalidParameter("qualification_check: theta must lie in [0, 1)");
  }
  std::vector<double> lambdas;
  for (double g : scale.g_spectrum()) {
    if (g <= f.cutoff) lambdas.push_back(g);
  }

  QualificationReport report;
  for (double alpha : alpha_grid) {
    const double rhs = std::pow(alpha, theta) * phi_eval(f, alpha);
    double sup = 0.0;
    for (double lambda : lambdas) {
      sup = std::max(sup, alpha * std::pow(lambda, theta) * phi_eval(f, lambda) / (lambda + alpha));
    }
    QualificationEntry e{alpha, sup / rhs, sup <= C * rhs};
    report.worst_ratio = std::max(report.worst_ratio, e.ratio);
    report.all_pass = report.all_pass && e.pass;
    report.entries.push_back(e);
  }
  return report;
}

double psi_eval(const IndexFunction& f, double degree_a, double alpha) {
  return phi_eval(f, alpha) * std::pow(alpha, degree_a / (2.0 * degree_a + 2.0));
}

PsiInversion psi_inverse_detailed(const IndexFunction& f, double degree_a, double delta) {
  const double top = psi_eval(f, degree_a, f.cutoff);
  if (!(delta > 0.0) || delta > top) {
    throw OutOfRangeError("psi_inverse: delta must lie in (0, psi(cutoff)]");
  }
  double lo = kLogAlphaFloor;
  double hi = std::log(f.cutoff);
  if (delta < psi_eval(f, degree_a, std::exp(lo))) {
    throw OutOfRangeError("psi_inverse: delta below the representable range");
  }

  PsiInversion out{f.cutoff, 0};
  if (std::abs(top - delta) <= kPsiTolerance * delta) return out;
  for (int iter = 1; iter <= kMaxPsiIterations; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double alpha = std::exp(mid);
    const double value = psi_eval(f, degree_a, alpha);
    out = {alpha, iter};
    if (std::abs(value - delta) <= kPsiTolerance * delta) return out;
    if (value < delta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw InternalError("psi_inverse: bisection did not converge");
}

double psi_inverse(const IndexFunction& f, double degree_a, double delta) {
  return psi_inverse_detailed(f, degree_a, delta).alpha;
}

std::vector<double> rate_ratio(const std::vector<std::pair<double, double>>& errors,
                               const IndexFunction& f) {
  std::vector<double> out;
  out.reserve(errors.size());
  for (const auto& [delta, error] : errors) out.push_back(error / phi_eval(f, delta));
  return out;
}

double calibrate_K0(const ProblemSpec& p, const IndexFunction& f,
                    const std::vector<double>& alpha_grid) {
  double K0 = 0.0;
  for (double alpha : alpha_grid) {
    K0 = std::max(K0, rate_functions(p, alpha).bound_f9 / phi_eval(f, alpha));
  }
  return K0;
}

double log_rate_bound(const ProblemSpec& p, const IndexFunction& f, double K0, double alpha,
                      double delta) {
  return K0 * phi_eval(f, alpha) + error_bound_noise_term(p, alpha, delta);
}

}  // namespace hstik
