#pragma once

#include <iosfwd>
#include <vector>

#include "hstik/model.hpp"

namespace hstik {

/// Rate functions of the auxiliary-element error analysis at one alpha.
///
/// With e = u* - u_bar and r_alpha = alpha (G + alpha)^{-1} e:
///   f1 = ||r_alpha||
///   f2 = alpha^{-a/(2a+2)}      ||G^{a/(2a+2)} r_alpha||
///   f3 = alpha^{-(2a+1)/(2a+2)} ||G^{(2a+1)/(2a+2)} r_alpha||
///   f4 = c_b f2 + f3   while u_alpha stays in the domain ball,
///        ||F(u_bar) - f*|| / alpha^{a/(2a+2)} otherwise
///   f5 = f4 / c_a, f6 = f2 + f5, f7 = f3 + f4, f8 = max(f6, f7), f9 = f1 + f8
///   K1 = 2 / c_a, K2 = max(K1, 1)
struct AuxDiagnostics {
  double alpha = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
  double f4 = 0.0;
  double f5 = 0.0;
  double K1 = 0.0;
  double K2 = 0.0;
  double bound_f9 = 0.0;
  /// True when ||u_alpha|| <= rho, i.e. the small-alpha branch of f4 applies.
  bool aux_in_domain = true;
};

/// u_alpha = u_bar + G (G + alpha I)^{-1} (u* - u_bar).
SeqVector auxiliary_element(const ProblemSpec& p, double alpha);

/// Second algebraic form u* - alpha (G + alpha I)^{-1} (u* - u_bar).
SeqVector auxiliary_element_residual_form(const ProblemSpec& p, double alpha);

AuxDiagnostics rate_functions(const ProblemSpec& p, double alpha);

/// f9(alpha) + K2 delta / alpha^{a/(2a+2)}; an upper bound for
/// ||u_alpha^delta - u*||.
double error_bound(const ProblemSpec& p, double alpha, double delta);

/// Noise term K2 delta / alpha^{a/(2a+2)} of error_bound on its own.
double error_bound_noise_term(const ProblemSpec& p, double alpha, double delta);

/// One row of the diagnostics dump.
struct AuxRow {
  AuxDiagnostics diag;
  double bound = 0.0;
  double measured_error = 0.0;
};

/// Diagnostics over an alpha grid at noise level delta. The measured
/// error uses the Tikhonov minimizer for a sample drawn with `seed`.
std::vector<AuxRow> aux_diagnostics_grid(const ProblemSpec& p, const std::vector<double>& alphas,
                                         double delta, std::uint64_t seed);

/// CSV with header alpha,f1,f2,f3,f4,f9,bound,measured_error.
void write_aux_csv(std::ostream& out, const std::vector<AuxRow>& rows);

}  // namespace hstik
