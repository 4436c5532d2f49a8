#pragma once

#include <limits>
#include <vector>

#include "hstik/model.hpp"

namespace hstik {

/// Regularized solution u_alpha^delta with its diagnostics.
struct RegResult {
  SeqVector u;
  /// +infinity means the trivial choice u = initial guess.
  double alpha = 0.0;
  /// ||F(u) - f^delta||
  double misfit = 0.0;
  /// ||u - initial_guess||_1
  double penalty = 0.0;
  /// misfit^2 + alpha * penalty^2 (misfit^2 when alpha is infinite)
  double tikhonov_value = 0.0;

  bool infinite_alpha() const noexcept { return alpha == std::numeric_limits<double>::infinity(); }
};

/// Real roots of c3 x^3 + c2 x^2 + c1 x + c0 (c3 != 0), each refined by
/// Newton steps on the unnormalized polynomial. Roots are returned in
/// ascending order; a double root may appear once or twice.
std::vector<double> real_cubic_roots(double c3, double c2, double c1, double c0);

/// One separable coordinate of the Tikhonov functional,
///   (a (c x + x^2) - f)^2 + weight (x - center)^2 + lambda x^2
/// for the quadratic kind, and with a x in place of a (c x + x^2) for the
/// linear kind. `weight` is alpha * b_n^2, `lambda` the ball multiplier.
struct CoordinateObjective {
  ProblemKind kind = ProblemKind::DiagonalQuadratic;
  double a = 1.0;
  double c = 7.0;
  double f = 0.0;
  double weight = 0.0;
  double center = 0.0;
  double lambda = 0.0;

  double value(double x) const;
  double derivative(double x) const;
};

/// Global minimizer of one coordinate objective. For the quadratic kind
/// all real stationary points are enumerated and the smallest objective
/// value wins; ties go to the point closer to `center`.
double minimize_coordinate(const CoordinateObjective& objective);

/// Exact global minimizer of ||F u - f^delta||^2 + alpha ||u - u_bar||_1^2
/// over the ball ||u|| <= rho. If the unconstrained minimizer leaves the
/// ball, a Lagrange multiplier for the constraint is bisected until the
/// solution lands on the sphere.
RegResult minimize_tikhonov(const ProblemSpec& p, const SeqVector& f_delta, double alpha);

/// Closed-form solve of the normal equation
///   (A^T A + alpha B^2) u = A^T f^delta + alpha B^2 u_bar
/// for DiagonalLinear problems.
RegResult solve_linear_fractional(const ProblemSpec& p, const SeqVector& f_delta, double alpha);

/// Relative residual of the normal equation above at u, measured against
/// ||A^T f^delta + alpha B^2 u_bar||.
double linear_normal_equation_residual(const ProblemSpec& p, const SeqVector& f_delta,
                                       double alpha, const SeqVector& u);

/// Tikhonov functional value at an arbitrary u.
double tikhonov_functional(const ProblemSpec& p, const SeqVector& f_delta, double alpha,
                           const SeqVector& u);

/// Fill misfit, penalty and functional value for a given u.
RegResult make_result(const ProblemSpec& p, const SeqVector& f_delta, double alpha, SeqVector u);

/// ||F(u_alpha^delta) - f^delta|| for a freshly computed minimizer.
double misfit_at(const ProblemSpec& p, const NoisySample& sample, double alpha);

}  // namespace hstik
