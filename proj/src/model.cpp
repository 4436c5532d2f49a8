#include "hstik/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "hstik/errors.hpp"

namespace hstik {

namespace {

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw. The
// standard distributions are implementation-defined, this mapping is not.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double symmetric_uniform(std::mt19937_64& rng, double half_width) {
  return half_width * (2.0 * unit_uniform(rng) - 1.0);
}

}  // namespace

void validate(const ProblemSpec& p) {
  const std::size_t n = p.size();
  if (n == 0) throw InvalidParameter("ProblemSpec: empty problem");
  if (p.scale.size() != n || p.exact_solution.size() != n || p.initial_guess.size() != n) {
    throw InvalidParameter("ProblemSpec: inconsistent lengths");
  }
  if (!(p.c_a > 0.0) || !(p.c_a <= p.c_b)) {
    throw InvalidParameter("ProblemSpec: constants must satisfy 0 < c_a <= c_b");
  }
  if (!(p.domain_radius > 0.0)) throw InvalidParameter("ProblemSpec: domain radius must be > 0");
  if (!(p.exact_solution.norm() < p.domain_radius)) {
    throw InvalidParameter("ProblemSpec: exact solution is not interior to the domain ball");
  }
  if (!std::isfinite(norm_tau(p.scale, p.initial_guess, 1.0))) {
    throw InvalidParameter("ProblemSpec: initial guess has infinite penalty");
  }
}

ProblemSpec build_paper_problem(const PaperProblemParams& params) {
  const std::size_t n = params.n;
  if (n < 2) throw InvalidParameter("build_paper_problem: N must be at least 2");
  const double c = params.linear_coefficient;
  const double rho = params.domain_radius;
  if (!(c - 2.0 * rho > 0.0)) {
    throw InvalidParameter("build_paper_problem: need coefficient > 2 * radius for c_a > 0");
  }

  std::vector<double> a(n);
  std::vector<double> exact(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double idx = static_cast<double>(i + 1);
    a[i] = 1.0 / idx;
    exact[i] = i == 0 ? 1.0 : 1.0 / (std::sqrt(idx) * std::pow(std::log(idx), params.q));
  }

  ProblemSpec p{
      .kind = ProblemKind::DiagonalQuadratic,
      .forward_multipliers = std::move(a),
      .linear_coefficient = c,
      .domain_radius = rho,
      .exact_solution = SeqVector(std::move(exact)),
      .initial_guess = SeqVector(n),
      .scale = DiagonalScale::identity_index(n, 1.0),
      .c_a = c - 2.0 * rho,
      .c_b = c + 2.0 * rho,
  };
  validate(p);
  return p;
}

ProblemSpec build_paper_problem(std::size_t n) {
  PaperProblemParams params;
  params.n = n;
  return build_paper_problem(params);
}

ProblemSpec build_linear_problem(DiagonalScale scale, std::vector<double> forward_multipliers,
                                 SeqVector exact_solution, SeqVector initial_guess) {
  const std::size_t n = forward_multipliers.size();
  if (scale.size() != n) throw InvalidParameter("build_linear_problem: length mismatch");
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = forward_multipliers[i];
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw InvalidParameter("build_linear_problem: forward multipliers must be positive");
    }
    const double ratio = a / scale.power(i, -scale.degree_a());
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  ProblemSpec p{
      .kind = ProblemKind::DiagonalLinear,
      .forward_multipliers = std::move(forward_multipliers),
      .linear_coefficient = 1.0,
      .domain_radius = std::numeric_limits<double>::infinity(),
      .exact_solution = std::move(exact_solution),
      .initial_guess = std::move(initial_guess),
      .scale = std::move(scale),
      .c_a = lo,
      .c_b = hi,
  };
  validate(p);
  return p;
}

ProblemSpec build_isometric_linear_problem(DiagonalScale scale, SeqVector exact_solution) {
  std::vector<double> a(scale.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = scale.power(i, -scale.degree_a());
  SeqVector guess(scale.size());
  return build_linear_problem(std::move(scale), std::move(a), std::move(exact_solution),
                              std::move(guess));
}

SeqVector forward(const ProblemSpec& p, const SeqVector& u) {
  if (u.size() != p.size()) throw InvalidParameter("forward: length mismatch");
  std::vector<double> out(u.size());
  const auto& a = p.forward_multipliers;
  switch (p.kind) {
    case ProblemKind::DiagonalQuadratic:
      for (std::size_t i = 0; i < u.size(); ++i) {
        out[i] = a[i] * (p.linear_coefficient * u[i] + u[i] * u[i]);
      }
      break;
    case ProblemKind::DiagonalLinear:
      for (std::size_t i = 0; i < u.size(); ++i) out[i] = a[i] * u[i];
      break;
  }
  return SeqVector(std::move(out));
}

SeqVector exact_data(const ProblemSpec& p) { return forward(p, p.exact_solution); }

NoisySample generate_noise(const ProblemSpec& p, double delta, std::uint64_t seed,
                           NoiseModel model) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw InvalidParameter("generate_noise: delta must be finite and >= 0");
  }
  SeqVector data = exact_data(p);
  if (delta == 0.0) return NoisySample{std::move(data), delta, seed};

  const double half_width = delta / std::sqrt(static_cast<double>(p.size()));
  std::mt19937_64 rng(seed);
  SeqVector noise(p.size());
  for (std::size_t i = 0; i < noise.size(); ++i) {
    noise[i] = model == NoiseModel::UniformInterval
                   ? symmetric_uniform(rng, half_width)
                   : (unit_uniform(rng) < 0.5 ? -half_width : half_width);
  }
  // Sign noise sits exactly on ||Delta|| = delta, so rounding in f* + Delta
  // can overshoot; shrink until the realized perturbation obeys the bound.
  const SeqVector exact = data;
  for (int attempt = 0;; ++attempt) {
    data = exact + noise;
    const double realized = (data - exact).norm();
    if (realized <= delta) break;
    if (attempt == 8) throw InternalError("generate_noise: cannot enforce the noise bound");
    noise *= (delta / realized) * (1.0 - 1e-9);
  }
  return NoisySample{std::move(data), delta, seed};
}

double norm_equivalence_ratio(const ProblemSpec& p, const SeqVector& u) {
  const SeqVector diff = u - p.exact_solution;
  const double denom = norm_tau(p.scale, diff, -p.scale.degree_a());
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (forward(p, u) - exact_data(p)).norm() / denom;
}

std::pair<double, double> verify_norm_equivalence(const ProblemSpec& p, int samples,
                                                  std::uint64_t seed) {
  if (samples < 1) throw InvalidParameter("verify_norm_equivalence: samples must be >= 1");
  std::mt19937_64 rng(seed);
  const std::size_t n = p.size();
  const double radius =
      std::isfinite(p.domain_radius) ? p.domain_radius : 2.0 * p.exact_solution.norm() + 1.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (int s = 0; s < samples; ++s) {
    // Coordinates damped by 1/n^2 keep ||u||_1 bounded independently of N.
    SeqVector u(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double idx = static_cast<double>(i + 1);
      u[i] = symmetric_uniform(rng, 1.0) / (idx * idx);
    }
    const double norm = u.norm();
    if (norm == 0.0) continue;
    u *= radius * unit_uniform(rng) / norm;
    const double ratio = norm_equivalence_ratio(p, u);
    if (std::isnan(ratio)) continue;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {lo, hi};
}

}  // namespace hstik
