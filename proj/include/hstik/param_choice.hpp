#pragma once

#include <map>
#include <variant>
#include <vector>

#include "hstik/solver.hpp"

namespace hstik {

/// alpha = c0 * delta^kappa.
struct APrioriRule {
  double c0 = 1.0;
  double kappa = 2.0;
};

/// Sequential discrepancy principle: geometric grid alpha0 * theta^{+-k},
/// target misfit b * delta.
struct DiscrepancyRule {
  double b = 4.0;
  double theta = 10.0;
  double alpha0 = 1.0;
  int max_steps = 60;
};

using ChoiceRule = std::variant<APrioriRule, DiscrepancyRule>;

/// Throws InvalidParameter on c0 <= 0, kappa <= 0, b <= 1, theta <= 1,
/// alpha0 <= 0 or max_steps < 1.
void validate(const ChoiceRule& rule);

/// Where an exponent kappa sits relative to the convergence window
/// 0 < kappa < 2 + 2/a.
enum class KappaRegime {
  /// 0 < kappa < 2: delta^2 / alpha -> 0
  BelowTwo,
  /// kappa = 2: delta^2 / alpha constant
  Two,
  /// 2 < kappa < 2 + 2/a: delta^2 / alpha -> infinity, still convergent
  AboveTwo,
  /// kappa = 2 + 2/a: noise term of the error bound stays bounded away from 0
  Borderline,
  /// kappa > 2 + 2/a: no convergence guarantee
  Divergent,
};

KappaRegime classify_kappa(double kappa, double degree_a);

/// True iff the a priori exponent is in the convergence window.
bool kappa_converges(double kappa, double degree_a);

struct APrioriChoice {
  double alpha = 0.0;
  KappaRegime regime = KappaRegime::Two;
  /// Set when kappa lies outside 0 < kappa < 2 + 2/a.
  bool warning = false;
};

/// c0 * delta^kappa. Throws InvalidParameter for delta <= 0.
double choose_apriori(double delta, const APrioriRule& rule);

/// choose_apriori plus the kappa classification for degree a.
APrioriChoice choose_apriori_flagged(double delta, const APrioriRule& rule, double degree_a);

enum class ChoiceBranch { InfiniteAlpha, DescendingGrid, AscendingGrid };

struct ChoiceOutcome {
  /// +infinity for the InfiniteAlpha branch.
  double alpha_selected = 0.0;
  RegResult result;
  /// Grid steps k taken beyond alpha0.
  int iterations = 0;
  ChoiceBranch branch = ChoiceBranch::InfiniteAlpha;
  /// Partner parameter alpha' of the crossing pair, alpha <= alpha' <= c alpha;
  /// +infinity for the InfiniteAlpha branch.
  double alpha_partner = 0.0;
  double misfit_partner = 0.0;
  /// Constant c of the crossing condition, equal to theta.
  double c = 0.0;
  /// Every probed (alpha, misfit) pair in probe order.
  std::vector<std::pair<double, double>> probes;
};

/// Sequential discrepancy principle. Throws NoCrossingError when the grid
/// is exhausted and InvalidParameter when delta <= 0.
ChoiceOutcome choose_discrepancy(const ProblemSpec& p, const NoisySample& sample,
                                 const DiscrepancyRule& rule);

}  // namespace hstik
