#include "hstik/param_choice.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hstik/errors.hpp"

namespace hstik {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool near(double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y)); }

}  // namespace

void validate(const ChoiceRule& rule) {
  if (const auto* r = std::get_if<APrioriRule>(&rule)) {
    if (!(r->c0 > 0.0)) throw InvalidParameter("a priori rule: c0 must be positive");
    if (!(r->kappa > 0.0)) throw InvalidParameter("a priori rule: kappa must be positive");
    return;
  }
  const auto& r = std::get<DiscrepancyRule>(rule);
  if (!(r.b > 1.0)) throw InvalidParameter("discrepancy rule: b must exceed 1");
  if (!(r.theta > 1.0)) throw InvalidParameter("discrepancy rule: theta must exceed 1");
  if (!(r.alpha0 > 0.0)) throw InvalidParameter("discrepancy rule: alpha0 must be positive");
  if (r.max_steps < 1) throw InvalidParameter("discrepancy rule: max_steps must be >= 1");
}

KappaRegime classify_kappa(double kappa, double degree_a) {
  const double upper = 2.0 + 2.0 / degree_a;
  if (near(kappa, upper)) return KappaRegime::Borderline;
  if (kappa > upper) return KappaRegime::Divergent;
  if (near(kappa, 2.0)) return KappaRegime::Two;
  return kappa < 2.0 ? KappaRegime::BelowTwo : KappaRegime::AboveTwo;
}

bool kappa_converges(double kappa, double degree_a) {
  const auto regime = classify_kappa(kappa, degree_a);
  return kappa > 0.0 && regime != KappaRegime::Borderline && regime != KappaRegime::Divergent;
}

double choose_apriori(double delta, const APrioriRule& rule) {
  if (!(delta > 0.0)) throw InvalidParameter("choose_apriori: delta must be positive");
  validate(ChoiceRule{rule});
  return rule.c0 * std::pow(delta, rule.kappa);
}

APrioriChoice choose_apriori_flagged(double delta, const APrioriRule& rule, double degree_a) {
  APrioriChoice choice;
  choice.alpha = choose_apriori(delta, rule);
  choice.regime = classify_kappa(rule.kappa, degree_a);
  choice.warning = !kappa_converges(rule.kappa, degree_a);
  return choice;
}

ChoiceOutcome choose_discrepancy(const ProblemSpec& p, const NoisySample& sample,
                                 const DiscrepancyRule& rule) {
  if (!(sample.delta > 0.0)) throw InvalidParameter("choose_discrepancy: delta must be positive");
  validate(ChoiceRule{rule});

  const double target = rule.b * sample.delta;
  ChoiceOutcome out;
  out.c = rule.theta;

  const double start_misfit = (forward(p, p.initial_guess) - sample.data).norm();
  if (start_misfit <= target) {
    out.alpha_selected = kInf;
    out.alpha_partner = kInf;
    out.misfit_partner = start_misfit;
    out.branch = ChoiceBranch::InfiniteAlpha;
    out.result = make_result(p, sample.data, kInf, p.initial_guess);
    return out;
  }

  // Memo of grid solves keyed by signed step index (alpha0 * theta^k).
  std::map<int, RegResult> solved;
  auto probe = [&](int k) -> const RegResult& {
    auto it = solved.find(k);
    if (it == solved.end()) {
      const double alpha = rule.alpha0 * std::pow(rule.theta, static_cast<double>(k));
      it = solved.emplace(k, minimize_tikhonov(p, sample.data, alpha)).first;
      out.probes.emplace_back(alpha, it->second.misfit);
    }
    return it->second;
  };

  const auto no_crossing = [&](const char* direction) {
    return NoCrossingError(std::string("choose_discrepancy: no crossing of b*delta within ") +
                           std::to_string(rule.max_steps) + " " + direction + " steps");
  };

  if (probe(0).misfit >= target) {
    out.branch = ChoiceBranch::DescendingGrid;
    for (int k = 1; k <= rule.max_steps; ++k) {
      if (probe(-k).misfit <= target && target <= probe(-(k - 1)).misfit) {
        out.iterations = k;
        out.result = probe(-k);
        out.alpha_selected = out.result.alpha;
        out.alpha_partner = probe(-(k - 1)).alpha;
        out.misfit_partner = probe(-(k - 1)).misfit;
        return out;
      }
    }
    throw no_crossing("descending");
  }

  out.branch = ChoiceBranch::AscendingGrid;
  for (int k = 1; k <= rule.max_steps; ++k) {
    if (probe(k - 1).misfit <= target && target <= probe(k).misfit) {
      out.iterations = k;
      out.result = probe(k - 1);
      out.alpha_selected = out.result.alpha;
      out.alpha_partner = probe(k).alpha;
      out.misfit_partner = probe(k).misfit;
      return out;
    }
  }
  throw no_crossing("ascending");
}

}  // namespace hstik
