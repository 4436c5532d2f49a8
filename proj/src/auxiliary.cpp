#include "hstik/auxiliary.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "hstik/errors.hpp"
#include "hstik/format.hpp"
#include "hstik/solver.hpp"

namespace hstik {

namespace {

void check_alpha(double alpha, const char* where) {
  if (!(alpha > 0.0)) throw InvalidParameter(std::string(where) + ": alpha must be positive");
}

// Exponent a/(2a+2) that converts between alpha and the noise scale.
double noise_exponent(const ProblemSpec& p) {
  const double a = p.scale.degree_a();
  return a / (2.0 * a + 2.0);
}

}  // namespace

SeqVector auxiliary_element(const ProblemSpec& p, double alpha) {
  check_alpha(alpha, "auxiliary_element");
  return p.initial_guess + apply_G_filter(p.scale, p.exact_solution - p.initial_guess, alpha);
}

SeqVector auxiliary_element_residual_form(const ProblemSpec& p, double alpha) {
  check_alpha(alpha, "auxiliary_element_residual_form");
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double e = p.exact_solution[i] - p.initial_guess[i];
    out[i] = p.exact_solution[i] - alpha / (p.scale.g(i) + alpha) * e;
  }
  return SeqVector(std::move(out));
}

AuxDiagnostics rate_functions(const ProblemSpec& p, double alpha) {
  check_alpha(alpha, "rate_functions");
  const double a = p.scale.degree_a();
  const double s = noise_exponent(p);

  double sum1 = 0.0;
  double sum2 = 0.0;
  double sum3 = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double e = p.exact_solution[i] - p.initial_guess[i];
    const double r = alpha / (p.scale.g(i) + alpha) * e;
    // G^{a/(2a+2)} = B^{-a} and G^{(2a+1)/(2a+2)} = B^{-(2a+1)}.
    const double r2 = p.scale.power(i, -a) * r;
    const double r3 = p.scale.power(i, -(2.0 * a + 1.0)) * r;
    sum1 += r * r;
    sum2 += r2 * r2;
    sum3 += r3 * r3;
  }

  AuxDiagnostics d;
  d.alpha = alpha;
  d.f1 = std::sqrt(sum1);
  d.f2 = std::pow(alpha, -s) * std::sqrt(sum2);
  d.f3 = std::pow(alpha, -(2.0 * a + 1.0) / (2.0 * a + 2.0)) * std::sqrt(sum3);

  d.aux_in_domain = auxiliary_element(p, alpha).norm() <= p.domain_radius;
  if (d.aux_in_domain) {
    d.f4 = p.c_b * d.f2 + d.f3;
  } else {
    const double start_residual = (forward(p, p.initial_guess) - exact_data(p)).norm();
    d.f4 = start_residual / std::pow(alpha, s);
  }
  d.f5 = d.f4 / p.c_a;
  d.K1 = 2.0 / p.c_a;
  d.K2 = std::max(d.K1, 1.0);
  const double f6 = d.f2 + d.f5;
  const double f7 = d.f3 + d.f4;
  d.bound_f9 = d.f1 + std::max(f6, f7);

  if (!std::isfinite(d.bound_f9)) throw OverflowError("rate_functions: non-finite value");
  return d;
}

double error_bound_noise_term(const ProblemSpec& p, double alpha, double delta) {
  check_alpha(alpha, "error_bound");
  const double K2 = std::max(2.0 / p.c_a, 1.0);
  return K2 * delta / std::pow(alpha, noise_exponent(p));
}

double error_bound(const ProblemSpec& p, double alpha, double delta) {
  if (!(delta >= 0.0)) throw InvalidParameter("error_bound: delta must be >= 0");
  return rate_functions(p, alpha).bound_f9 + error_bound_noise_term(p, alpha, delta);
}

std::vector<AuxRow> aux_diagnostics_grid(const ProblemSpec& p, const std::vector<double>& alphas,
                                         double delta, std::uint64_t seed) {
  const NoisySample sample = generate_noise(p, delta, seed);
  std::vector<AuxRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    AuxRow row;
    row.diag = rate_functions(p, alpha);
    row.bound = row.diag.bound_f9 + error_bound_noise_term(p, alpha, delta);
    row.measured_error = (minimize_tikhonov(p, sample.data, alpha).u - p.exact_solution).norm();
    rows.push_back(row);
  }
  return rows;
}

void write_aux_csv(std::ostream& out, const std::vector<AuxRow>& rows) {
  out << "alpha,f1,f2,f3,f4,f9,bound,measured_error\n";
  for (const auto& r : rows) {
    out << format_sci(r.diag.alpha) << ',' << format_sci(r.diag.f1) << ','
        << format_sci(r.diag.f2) << ',' << format_sci(r.diag.f3) << ',' << format_sci(r.diag.f4)
        << ',' << format_sci(r.diag.bound_f9) << ',' << format_sci(r.bound) << ','
        << format_sci(r.measured_error) << '\n';
  }
}

}  // namespace hstik
