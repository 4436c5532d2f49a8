#include "hstik/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hstik/errors.hpp"

namespace hstik {

namespace {

double poly3(double c3, double c2, double c1, double c0, double x) {
  return ((c3 * x + c2) * x + c1) * x + c0;
}

double dpoly3(double c3, double c2, double c1, double x) {
  return (3.0 * c3 * x + 2.0 * c2) * x + c1;
}

// Newton refinement that only accepts steps reducing |p(x)|.
double polish_root(double c3, double c2, double c1, double c0, double x) {
  double residual = std::abs(poly3(c3, c2, c1, c0, x));
  for (int iter = 0; iter < 4 && residual > 0.0; ++iter) {
    const double slope = dpoly3(c3, c2, c1, x);
    if (slope == 0.0 || !std::isfinite(slope)) break;
    const double candidate = x - poly3(c3, c2, c1, c0, x) / slope;
    const double r = std::abs(poly3(c3, c2, c1, c0, candidate));
    if (!(r < residual)) break;
    x = candidate;
    residual = r;
  }
  return x;
}

constexpr double kBallTolerance = 1e-10;
constexpr int kMaxBisections = 400;

SeqVector solve_coordinates(const ProblemSpec& p, const SeqVector& f_delta, double alpha,
                            double lambda) {
  const std::size_t n = p.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double b = p.scale.multiplier(i);
    const CoordinateObjective objective{
        .kind = p.kind,
        .a = p.forward_multipliers[i],
        .c = p.linear_coefficient,
        .f = f_delta[i],
        .weight = alpha * b * b,
        .center = p.initial_guess[i],
        .lambda = lambda,
    };
    out[i] = minimize_coordinate(objective);
  }
  return SeqVector(std::move(out));
}

void check_alpha(double alpha, const char* where) {
  if (!(alpha > 0.0)) throw InvalidParameter(std::string(where) + ": alpha must be positive");
}

void check_data(const ProblemSpec& p, const SeqVector& f_delta, const char* where) {
  if (f_delta.size() != p.size()) throw InvalidParameter(std::string(where) + ": length mismatch");
}

}  // namespace

std::vector<double> real_cubic_roots(double c3, double c2, double c1, double c0) {
  if (c3 == 0.0 || !std::isfinite(c3)) {
    throw InternalError("real_cubic_roots: leading coefficient must be finite and non-zero");
  }
  const double A = c2 / c3;
  const double B = c1 / c3;
  const double C = c0 / c3;
  const double Q = (A * A - 3.0 * B) / 9.0;
  const double R = (2.0 * A * A * A - 9.0 * A * B + 27.0 * C) / 54.0;
  const double shift = A / 3.0;

  std::vector<double> roots;
  const double Q3 = Q * Q * Q;
  if (R * R < Q3) {
    const double sq = std::sqrt(Q);
    const double theta = std::acos(std::clamp(R / std::sqrt(Q3), -1.0, 1.0));
    constexpr double two_pi = 2.0 * std::numbers::pi;
    roots = {-2.0 * sq * std::cos(theta / 3.0) - shift,
             -2.0 * sq * std::cos((theta + two_pi) / 3.0) - shift,
             -2.0 * sq * std::cos((theta - two_pi) / 3.0) - shift};
  } else {
    const double S = -std::copysign(std::cbrt(std::abs(R) + std::sqrt(R * R - Q3)), R);
    const double T = S == 0.0 ? 0.0 : Q / S;
    roots.push_back(S + T - shift);
    // Near a double root the pair of complex roots collapses onto this real
    // point; keeping it as a candidate costs nothing.
    if (std::abs(S - T) <= 1e-6 * (std::abs(S) + std::abs(T) + 1.0)) {
      roots.push_back(-0.5 * (S + T) - shift);
    }
  }

  for (double& r : roots) {
    r = polish_root(c3, c2, c1, c0, r);
    if (!std::isfinite(r)) throw InternalError("real_cubic_roots: non-finite root");
  }
  if (roots.empty()) throw InternalError("real_cubic_roots: no real root found");
  std::sort(roots.begin(), roots.end());
  return roots;
}

double CoordinateObjective::value(double x) const {
  const double image = kind == ProblemKind::DiagonalQuadratic ? a * (c * x + x * x) : a * x;
  const double r = image - f;
  const double d = x - center;
  return r * r + weight * d * d + lambda * x * x;
}

double CoordinateObjective::derivative(double x) const {
  if (kind == ProblemKind::DiagonalLinear) {
    return 2.0 * ((a * x - f) * a + weight * (x - center) + lambda * x);
  }
  const double r = a * (c * x + x * x) - f;
  return 2.0 * (r * a * (c + 2.0 * x) + weight * (x - center) + lambda * x);
}

double minimize_coordinate(const CoordinateObjective& o) {
  if (o.kind == ProblemKind::DiagonalLinear) {
    return (o.a * o.f + o.weight * o.center) / (o.a * o.a + o.weight + o.lambda);
  }
  // Half the derivative of the quartic:
  //   2a^2 x^3 + 3c a^2 x^2 + (c^2 a^2 - 2 a f + w + lambda) x - (a c f + w center)
  const double a2 = o.a * o.a;
  const auto roots = real_cubic_roots(2.0 * a2, 3.0 * o.c * a2,
                                      o.c * o.c * a2 - 2.0 * o.a * o.f + o.weight + o.lambda,
                                      -(o.a * o.c * o.f + o.weight * o.center));
  double best = roots.front();
  double best_value = o.value(best);
  for (std::size_t k = 1; k < roots.size(); ++k) {
    const double v = o.value(roots[k]);
    if (v < best_value ||
        (v == best_value && std::abs(roots[k] - o.center) < std::abs(best - o.center))) {
      best = roots[k];
      best_value = v;
    }
  }
  return best;
}

double tikhonov_functional(const ProblemSpec& p, const SeqVector& f_delta, double alpha,
                           const SeqVector& u) {
  const double misfit = (forward(p, u) - f_delta).norm();
  const double penalty = norm_tau(p.scale, u - p.initial_guess, 1.0);
  return misfit * misfit + alpha * penalty * penalty;
}

RegResult make_result(const ProblemSpec& p, const SeqVector& f_delta, double alpha,
                      SeqVector u) {
  RegResult r;
  r.misfit = (forward(p, u) - f_delta).norm();
  r.penalty = norm_tau(p.scale, u - p.initial_guess, 1.0);
  r.alpha = alpha;
  r.tikhonov_value = std::isinf(alpha) ? r.misfit * r.misfit
                                       : r.misfit * r.misfit + alpha * r.penalty * r.penalty;
  r.u = std::move(u);
  return r;
}

RegResult minimize_tikhonov(const ProblemSpec& p, const SeqVector& f_delta, double alpha) {
  check_alpha(alpha, "minimize_tikhonov");
  check_data(p, f_delta, "minimize_tikhonov");

  SeqVector u = solve_coordinates(p, f_delta, alpha, 0.0);
  const double rho = p.domain_radius;
  if (u.norm() > rho) {
    // ||u(lambda)|| is non-increasing in the multiplier; bracket, then bisect.
    double lo = 0.0;
    double hi = alpha;
    SeqVector u_hi = solve_coordinates(p, f_delta, alpha, hi);
    while (u_hi.norm() > rho) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) throw InternalError("minimize_tikhonov: multiplier bracket failed");
      u_hi = solve_coordinates(p, f_delta, alpha, hi);
    }
    u = std::move(u_hi);
    for (int iter = 0; iter < kMaxBisections; ++iter) {
      if (std::abs(u.norm() - rho) <= kBallTolerance) break;
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      SeqVector u_mid = solve_coordinates(p, f_delta, alpha, mid);
      if (u_mid.norm() > rho) {
        lo = mid;
      } else {
        hi = mid;
        u = std::move(u_mid);
      }
    }
  }
  return make_result(p, f_delta, alpha, std::move(u));
}

RegResult solve_linear_fractional(const ProblemSpec& p, const SeqVector& f_delta, double alpha) {
  if (p.kind != ProblemKind::DiagonalLinear) {
    throw InvalidParameter("solve_linear_fractional: problem must be DiagonalLinear");
  }
  check_alpha(alpha, "solve_linear_fractional");
  check_data(p, f_delta, "solve_linear_fractional");
  std::vector<double> u(p.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double a = p.forward_multipliers[i];
    const double b2 = p.scale.power(i, 2.0);
    u[i] = (a * f_delta[i] + alpha * b2 * p.initial_guess[i]) / (a * a + alpha * b2);
  }
  return make_result(p, f_delta, alpha, SeqVector(std::move(u)));
}

double linear_normal_equation_residual(const ProblemSpec& p, const SeqVector& f_delta,
                                       double alpha, const SeqVector& u) {
  double residual = 0.0;
  double rhs_norm = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double a = p.forward_multipliers[i];
    const double b2 = p.scale.power(i, 2.0);
    const double rhs = a * f_delta[i] + alpha * b2 * p.initial_guess[i];
    const double lhs = (a * a + alpha * b2) * u[i];
    residual += (lhs - rhs) * (lhs - rhs);
    rhs_norm += rhs * rhs;
  }
  return rhs_norm == 0.0 ? std::sqrt(residual) : std::sqrt(residual / rhs_norm);
}

double misfit_at(const ProblemSpec& p, const NoisySample& sample, double alpha) {
  return minimize_tikhonov(p, sample.data, alpha).misfit;
}

}  // namespace hstik
