#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hstik/hilbert_scale.hpp"

namespace hstik {

enum class ProblemKind {
  /// (F u)_n = a_n (c u_n + u_n^2)
  DiagonalQuadratic,
  /// (F u)_n = a_n u_n
  DiagonalLinear,
};

/// A diagonal forward operator together with its exact solution, initial
/// guess, domain ball and the two-sided constants c_a <= c_b of
///   c_a ||u - u*||_{-a} <= ||F u - F u*|| <= c_b ||u - u*||_{-a}.
struct ProblemSpec {
  ProblemKind kind = ProblemKind::DiagonalQuadratic;
  std::vector<double> forward_multipliers;
  double linear_coefficient = 7.0;
  double domain_radius = 3.0;
  SeqVector exact_solution;
  SeqVector initial_guess;
  DiagonalScale scale;
  double c_a = 1.0;
  double c_b = 13.0;

  std::size_t size() const noexcept { return forward_multipliers.size(); }
};

/// Tunables of the sequence-space example; defaults reproduce the
/// published experiment.
struct PaperProblemParams {
  std::size_t n = 6000;
  double q = 2.31;
  double domain_radius = 3.0;
  double linear_coefficient = 7.0;
};

/// Throws InvalidParameter if any structural invariant of `p` fails
/// (lengths, 0 < c_a <= c_b, exact solution strictly inside the ball,
/// finite penalty of the initial guess).
void validate(const ProblemSpec& p);

/// Sequence-space example: a_n = 1/n, b_n = n, a = 1, u*_1 = 1,
/// u*_n = 1 / (sqrt(n) (ln n)^q), initial guess 0. The constants are
/// c_a = c - 2 rho and c_b = c + 2 rho, since
/// (F u - F v)_n = a_n (u_n - v_n)(c + u_n + v_n) with |u_n|, |v_n| <= rho.
ProblemSpec build_paper_problem(const PaperProblemParams& params = {});
ProblemSpec build_paper_problem(std::size_t n);

/// Linear diagonal problem (F u)_n = a_n u_n on the whole space
/// (domain radius +inf), with c_a, c_b computed as the extreme values of
/// a_n / b_n^{-a}.
ProblemSpec build_linear_problem(DiagonalScale scale, std::vector<double> forward_multipliers,
                                 SeqVector exact_solution, SeqVector initial_guess);

/// Exact-isometry linear problem a_n = b_n^{-a} (so c_a = c_b = 1).
ProblemSpec build_isometric_linear_problem(DiagonalScale scale, SeqVector exact_solution);

/// Evaluate F coordinate-wise.
SeqVector forward(const ProblemSpec& p, const SeqVector& u);

/// f* = F(u*).
SeqVector exact_data(const ProblemSpec& p);

/// Noisy right-hand side f^delta with ||f^delta - f*|| <= delta.
struct NoisySample {
  SeqVector data;
  double delta = 0.0;
  std::uint64_t seed = 0;
};

/// Distribution of the perturbations Delta_n, both bounded by
/// |Delta_n| <= delta / sqrt(N).
enum class NoiseModel {
  /// i.i.d. uniform on [-delta/sqrt(N), delta/sqrt(N)]
  UniformInterval,
  /// i.i.d. uniform on the endpoints {-delta/sqrt(N), +delta/sqrt(N)}
  RandomSign,
};

/// f^delta_n = f*_n + Delta_n. Bit-identical for identical seeds on every
/// platform (the generator and the uniform mapping are fixed here), and
/// ||f^delta - f*|| <= delta is enforced after rounding.
NoisySample generate_noise(const ProblemSpec& p, double delta, std::uint64_t seed,
                           NoiseModel model = NoiseModel::UniformInterval);

/// Empirical two-sided constants: min and max of
/// ||F u - f*|| / ||u - u*||_{-a} over random u in the domain ball.
std::pair<double, double> verify_norm_equivalence(const ProblemSpec& p, int samples,
                                                  std::uint64_t seed);

/// Same ratio for one given u; returns nullopt-like NaN when u == u*.
double norm_equivalence_ratio(const ProblemSpec& p, const SeqVector& u);

}  // namespace hstik
