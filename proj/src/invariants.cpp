#include "hstik/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "hstik/auxiliary.hpp"
#include "hstik/errors.hpp"
#include "hstik/format.hpp"
#include "hstik/oracles.hpp"
#include "hstik/param_choice.hpp"
#include "hstik/rates.hpp"

namespace hstik {

namespace {

constexpr double kRoundoff = 1e-12;

// Upper bound on max f_i(alpha) / phi(alpha) over alpha in [1e-10, 1e-2]
// for the default problem (observed 22.2, from f3 near alpha = 1e-4).
// The partial sums only grow with N, so it holds for every smaller N.
constexpr double kRateFunctionPhiBound = 25.0;

std::vector<double> decades(int from, int to) {
  std::vector<double> grid;
  for (int e = from; e >= to; --e) grid.push_back(std::pow(10.0, e));
  return grid;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

SeqVector random_vector(std::mt19937_64& rng, std::size_t n, double damping) {
  SeqVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = uniform(rng, -1.0, 1.0) / std::pow(static_cast<double>(i + 1), damping);
  }
  return v;
}

SeqVector random_ball_point(std::mt19937_64& rng, const ProblemSpec& p) {
  SeqVector v = random_vector(rng, p.size(), 1.0);
  v *= p.domain_radius * uniform(rng, 0.0, 1.0) / v.norm();
  return v;
}

class Recorder {
 public:
  explicit Recorder(std::vector<PropertyResult>& out) : out_(out) {}

  void add(const char* module, const char* name, bool passed, std::string detail) {
    out_.push_back({module, name, passed, std::move(detail)});
  }

  // Runs body, which reports its own verdict; library errors count as failures.
  template <typename Body>
  void run(const char* module, const char* name, Body&& body) {
    try {
      std::ostringstream detail;
      const bool passed = body(detail);
      add(module, name, passed, detail.str());
    } catch (const std::exception& e) {
      add(module, name, false, std::string("exception: ") + e.what());
    }
  }

 private:
  std::vector<PropertyResult>& out_;
};

bool rel_close(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

}  // namespace

std::vector<PropertyResult> run_invariant_suite(const ExperimentConfig& cfg,
                                                const SuiteOptions& options) {
  validate(cfg);
  std::vector<PropertyResult> results;
  Recorder rec(results);

  const ProblemSpec p = build_paper_problem(cfg.problem);
  const std::size_t n = p.size();
  const double a = p.scale.degree_a();
  const double s = a / (2.0 * a + 2.0);
  const std::uint64_t base_seed = cfg.seeds.front();
  const IndexFunction phi{cfg.source_kappa, 0.9};
  const int cases = options.random_cases;

  // ---- hilbert_scale ----
  rec.run("hilbert_scale", "interpolation_inequality", [&](std::ostream& d) {
    std::mt19937_64 rng(base_seed);
    double worst = 0.0;
    for (int k = 0; k < cases; ++k) {
      const SeqVector v = random_vector(rng, n, uniform(rng, 0.0, 2.0));
      const double lhs = norm_tau(p.scale, v, 0.0);
      const double rhs = std::pow(norm_tau(p.scale, v, -a), 1.0 / (a + 1.0)) *
                         std::pow(norm_tau(p.scale, v, 1.0), a / (a + 1.0));
      worst = std::max(worst, lhs / rhs);
    }
    d << "max ||v|| / bound = " << worst;
    return worst <= 1.0 + kRoundoff;
  });

  rec.run("hilbert_scale", "spectral_filter_bounds", [&](std::ostream& d) {
    int violations = 0;
    for (double alpha : decades(0, -13)) {
      for (std::size_t i = 0; i < n; ++i) {
        const double g = p.scale.g(i);
        const double factor = tikhonov_filter(g, alpha);
        if (!(factor > 0.0 && factor <= 1.0)) ++violations;
        if (1.0 / (g + alpha) > 1.0 / alpha) ++violations;
      }
    }
    d << violations << " violations";
    return violations == 0;
  });

  rec.run("hilbert_scale", "fractional_filter_bound", [&](std::ostream& d) {
    double worst = 0.0;
    for (double theta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (double alpha : decades(0, -13)) {
        for (std::size_t i = 0; i < n; ++i) {
          const double g = p.scale.g(i);
          worst = std::max(worst, std::pow(g, theta) / (g + alpha) / std::pow(alpha, theta - 1.0));
        }
      }
    }
    d << "max g^theta/(g+alpha) / alpha^(theta-1) = " << worst;
    return worst <= 1.0 + kRoundoff;
  });

  rec.run("hilbert_scale", "norm_tau_monotone", [&](std::ostream& d) {
    std::mt19937_64 rng(base_seed + 1);
    int violations = 0;
    for (int k = 0; k < cases; ++k) {
      const SeqVector v = random_vector(rng, n, 2.0);
      double prev = 0.0;
      for (double tau = -3.0; tau <= 2.0; tau += 0.5) {
        const double cur = norm_tau(p.scale, v, tau);
        if (cur < prev * (1.0 - kRoundoff)) ++violations;
        prev = cur;
      }
    }
    d << violations << " violations";
    return violations == 0;
  });

  // ---- model ----
  rec.run("model", "forward_exact_on_solution", [&](std::ostream& d) {
    const double err = (forward(p, p.exact_solution) - exact_data(p)).norm();
    d << "||F(u*) - f*|| = " << err;
    return err == 0.0;
  });

  rec.run("model", "noise_bound", [&](std::ostream& d) {
    std::mt19937_64 rng(base_seed + 2);
    int violations = 0;
    const SeqVector exact = exact_data(p);
    for (int k = 0; k < cases; ++k) {
      const double delta = std::pow(10.0, uniform(rng, -7.0, -1.0));
      const std::uint64_t seed = rng();
      for (auto model : {NoiseModel::UniformInterval, NoiseModel::RandomSign}) {
        const NoisySample sample = generate_noise(p, delta, seed, model);
        if ((sample.data - exact).norm() > delta) ++violations;
      }
    }
    d << violations << " violations";
    return violations == 0;
  });

  rec.run("model", "two_sided_norm_equivalence", [&](std::ostream& d) {
    const auto [lo, hi] = verify_norm_equivalence(p, cases, base_seed + 3);
    d << "ratios in [" << lo << ", " << hi << "], required [" << p.c_a << ", " << p.c_b << "]";
    return lo >= p.c_a && hi <= p.c_b;
  });

  rec.run("model", "log_source_condition", [&](std::ostream& d) {
    // u*_n = phi(g_n) w_n with w_n = 4^kappa / (sqrt(n) (ln n)^{q - kappa}).
    double worst = 0.0;
    const double kappa = phi.kappa;
    for (std::size_t i = 1; i < n; ++i) {
      const double idx = static_cast<double>(i + 1);
      const double w = std::pow(4.0, kappa) /
                       (std::sqrt(idx) * std::pow(std::log(idx), cfg.problem.q - kappa));
      worst = std::max(worst, std::abs(p.exact_solution[i] - phi_eval(phi, p.scale.g(i)) * w));
    }
    d << "max |u*_n - phi(g_n) w_n| = " << worst;
    return worst <= 1e-12;
  });

  rec.run("model", "oversmoothing_proxy", [&](std::ostream& d) {
    if (n < 6000) {
      d << "skipped below N = 6000";
      return true;
    }
    const double n1 = norm_tau(p.scale, p.exact_solution, 1.0);
    const double n0 = p.exact_solution.norm();
    d << "||u*||_1 = " << n1 << ", ||u*|| = " << n0;
    return n1 > 10.0 * n0;
  });

  // ---- solver ----
  rec.run("solver", "coordinate_global_optimality", [&](std::ostream& d) {
    std::mt19937_64 rng(base_seed + 4);
    double worst_arg = 0.0;
    int value_violations = 0;
    for (int k = 0; k < 50; ++k) {
      const double coef = 1.0 / std::floor(uniform(rng, 1.0, 6000.0));
      const double b = std::floor(uniform(rng, 1.0, 6000.0));
      const double alpha = std::pow(10.0, uniform(rng, -13.0, 0.0));
      const double f = coef * uniform(rng, -20.0, 60.0);
      const CoordinateObjective obj{.kind = ProblemKind::DiagonalQuadratic,
                                    .a = coef,
                                    .c = p.linear_coefficient,
                                    .f = f,
                                    .weight = alpha * b * b,
                                    .center = 0.0,
                                    .lambda = 0.0};
      const double x = minimize_coordinate(obj);
      const oracle::ScalarQuartic q{coef, p.linear_coefficient, f, alpha * b * b, 0.0};
      const auto ref = oracle::grid_minimize(q);
      worst_arg = std::max(worst_arg, std::abs(x - ref.x));
      if (std::abs(q.value(x) - ref.value) > 1e-12 * std::max(q.value(x), ref.value) + 1e-300 &&
          q.value(x) > ref.value) {
        ++value_violations;
      }
    }
    d << "max |x - x_oracle| = " << worst_arg << ", value violations " << value_violations;
    return worst_arg <= 1e-8 && value_violations == 0;
  });

  const NoisySample sample = generate_noise(p, 1e-3, base_seed, cfg.noise_model);

  rec.run("solver", "minimizer_property", [&](std::ostream& d) {
    std::mt19937_64 rng(base_seed + 5);
    const double alpha = 1e-6;
    const RegResult r = options.solve(p, sample.data, alpha);
    std::vector<SeqVector> competitors = {p.initial_guess, p.exact_solution};
    for (int k = 0; k < 20; ++k) competitors.push_back(random_ball_point(rng, p));
    int violations = 0;
    for (const auto& v : competitors) {
      if (r.tikhonov_value > tikhonov_functional(p, sample.data, alpha, v) * (1.0 + kRoundoff)) {
        ++violations;
      }
    }
    d << violations << " competitors beat the minimizer";
    return violations == 0;
  });

  rec.run("solver", "result_consistency", [&](std::ostream& d) {
    int violations = 0;
    for (double alpha : decades(0, -13)) {
      const RegResult r = options.solve(p, sample.data, alpha);
      const double recomputed = r.misfit * r.misfit + alpha * r.penalty * r.penalty;
      if (!rel_close(recomputed, r.tikhonov_value, 1e-10)) ++violations;
      if (r.u.norm() > p.domain_radius * (1.0 + kRoundoff)) ++violations;
      if (!std::isfinite(r.penalty)) ++violations;
    }
    d << violations << " violations";
    return violations == 0;
  });

  {
    // Misfit non-decreasing, penalty non-increasing in alpha.
    int misfit_violations = 0;
    int penalty_violations = 0;
    std::string error;
    try {
      for (std::uint64_t seed : cfg.seeds) {
        const NoisySample smp = generate_noise(p, 1e-3, seed, cfg.noise_model);
        double prev_misfit = -1.0;
        double prev_penalty = std::numeric_limits<double>::infinity();
        // Ascending alpha: 1e-13 ... 1e0.
        for (int e = -13; e <= 0; ++e) {
          const RegResult r = options.solve(p, smp.data, std::pow(10.0, e));
          if (r.misfit < prev_misfit * (1.0 - kRoundoff)) ++misfit_violations;
          if (r.penalty > prev_penalty * (1.0 + kRoundoff)) ++penalty_violations;
          prev_misfit = r.misfit;
          prev_penalty = r.penalty;
        }
      }
    } catch (const std::exception& e) {
      error = e.what();
    }
    rec.add("solver", "misfit_monotone", error.empty() && misfit_violations == 0,
            error.empty() ? std::to_string(misfit_violations) + " violations" : error);
    rec.add("solver", "penalty_monotone", error.empty() && penalty_violations == 0,
            error.empty() ? std::to_string(penalty_violations) + " violations" : error);
  }

  rec.run("solver", "linear_dual_route", [&](std::ostream& d) {
    std::mt19937_64 rng(base_seed + 6);
    const ProblemSpec lin = build_isometric_linear_problem(
        DiagonalScale::identity_index(n, a), random_vector(rng, n, 1.0));
    const SeqVector f = forward(lin, lin.exact_solution) + 1e-4 * random_vector(rng, n, 0.0);
    double worst_diff = 0.0;
    double worst_residual = 0.0;
    for (double alpha : decades(0, -10)) {
      const RegResult direct = minimize_tikhonov(lin, f, alpha);
      const RegResult closed = solve_linear_fractional(lin, f, alpha);
      worst_diff = std::max(worst_diff, (direct.u - closed.u).norm() / closed.u.norm());
      worst_residual =
          std::max(worst_residual, linear_normal_equation_residual(lin, f, alpha, closed.u));
    }
    d << "max relative difference " << worst_diff << ", max residual " << worst_residual;
    return worst_diff <= 1e-12 && worst_residual <= 1e-12;
  });

  rec.run("solver", "misfit_penalty_bound", [&](std::ostream& d) {
    int violations = 0;
    for (double delta : {1e-3, 1e-5}) {
      const NoisySample smp = generate_noise(p, delta, base_seed + 7, cfg.noise_model);
      for (double alpha : decades(-2, -10)) {
        const RegResult r = options.solve(p, smp.data, alpha);
        const AuxDiagnostics aux = rate_functions(p, alpha);
        const double bound = aux.f4 * std::pow(alpha, s) + delta;
        if (std::max(r.misfit, std::sqrt(alpha) * r.penalty) > bound) ++violations;
      }
    }
    d << violations << " violations";
    return violations == 0;
  });

  // ---- auxiliary ----
  rec.run("auxiliary", "rate_function_identities", [&](std::ostream& d) {
    double worst = 0.0;
    for (double alpha : decades(-1, -10)) {
      const AuxDiagnostics aux = rate_functions(p, alpha);
      const SeqVector ua = auxiliary_element(p, alpha);
      const double e1 = (ua - p.exact_solution).norm();
      const double e2 = norm_tau(p.scale, ua - p.exact_solution, -a);
      const double e3 = norm_tau(p.scale, ua - p.initial_guess, 1.0);
      worst = std::max({worst, std::abs(e1 - aux.f1) / aux.f1,
                        std::abs(e2 - aux.f2 * std::pow(alpha, s)) / e2,
                        std::abs(e3 - aux.f3 * std::pow(alpha, -1.0 / (2.0 * a + 2.0))) / e3});
    }
    d << "max relative deviation " << worst;
    return worst <= 1e-10;
  });

  rec.run("auxiliary", "auxiliary_forms_agree", [&](std::ostream& d) {
    double worst = 0.0;
    for (double alpha : decades(0, -13)) {
      const SeqVector u1 = auxiliary_element(p, alpha);
      const SeqVector u2 = auxiliary_element_residual_form(p, alpha);
      worst = std::max(worst, (u1 - u2).norm() / u1.norm());
    }
    d << "max relative difference " << worst;
    return worst <= 1e-12;
  });

  rec.run("auxiliary", "fixed_point_at_solution", [&](std::ostream& d) {
    ProblemSpec q = p;
    q.initial_guess = q.exact_solution;
    int mismatches = 0;
    for (double alpha : decades(0, -13)) {
      if (!(auxiliary_element(q, alpha) == q.exact_solution)) ++mismatches;
      const AuxDiagnostics aux = rate_functions(q, alpha);
      if (aux.f1 != 0.0 || aux.f2 != 0.0 || aux.f3 != 0.0) ++mismatches;
    }
    d << mismatches << " mismatches";
    return mismatches == 0;
  });

  rec.run("auxiliary", "vanishing_rate_functions", [&](std::ostream& d) {
    const auto grid = decades(-1, -10);
    const AuxDiagnostics first = rate_functions(p, grid.front());
    const AuxDiagnostics last = rate_functions(p, grid.back());
    d << "f1 " << last.f1 / first.f1 << ", f2 " << last.f2 / first.f2 << ", f3 "
      << last.f3 / first.f3 << " (end/start)";
    return last.f1 < 0.1 * first.f1 && last.f2 < 0.1 * first.f2 && last.f3 < 0.1 * first.f3;
  });

  rec.run("auxiliary", "error_bound_dominates", [&](std::ostream& d) {
    int violations = 0;
    double worst = 0.0;
    for (double delta : {1e-3, 1e-4, 1e-5}) {
      const double alpha = delta * delta;
      for (std::uint64_t seed : cfg.seeds) {
        const NoisySample smp = generate_noise(p, delta, seed, cfg.noise_model);
        const RegResult r = options.solve(p, smp.data, alpha);
        const double err = (r.u - p.exact_solution).norm();
        const double bound = error_bound(p, alpha, delta);
        worst = std::max(worst, err / bound);
        if (err > bound) ++violations;
      }
    }
    d << violations << " violations, max error/bound " << worst;
    return violations == 0;
  });

  rec.run("auxiliary", "weak_norm_error_bound", [&](std::ostream& d) {
    int violations = 0;
    for (double delta : {1e-3, 1e-4, 1e-5}) {
      const double alpha = delta * delta;
      for (std::uint64_t seed : cfg.seeds) {
        const NoisySample smp = generate_noise(p, delta, seed, cfg.noise_model);
        const RegResult r = options.solve(p, smp.data, alpha);
        const AuxDiagnostics aux = rate_functions(p, alpha);
        const double err = norm_tau(p.scale, r.u - p.exact_solution, -a);
        if (err > aux.f5 * std::pow(alpha, s) + aux.K1 * delta) ++violations;
      }
    }
    d << violations << " violations";
    return violations == 0;
  });

  // ---- param_choice ----
  rec.run("param_choice", "discrepancy_crossing", [&](std::ostream& d) {
    const DiscrepancyRule rule = std::holds_alternative<DiscrepancyRule>(cfg.rule)
                                     ? std::get<DiscrepancyRule>(cfg.rule)
                                     : DiscrepancyRule{};
    int violations = 0;
    const auto ladder = default_table2_ladder();
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::uint64_t seed : cfg.seeds) {
        const NoisySample smp = generate_noise(p, ladder[r], row_seed(seed, r), cfg.noise_model);
        const ChoiceOutcome out = choose_discrepancy(p, smp, rule);
        const double target = rule.b * ladder[r];
        if (out.branch == ChoiceBranch::InfiniteAlpha) continue;
        if (!(out.result.misfit <= target && target <= out.misfit_partner)) ++violations;
        if (!(out.alpha_selected <= out.alpha_partner &&
              out.alpha_partner <= out.c * out.alpha_selected * (1.0 + kRoundoff))) {
          ++violations;
        }
        auto probes = out.probes;
        std::sort(probes.begin(), probes.end());
        for (std::size_t k = 1; k < probes.size(); ++k) {
          if (probes[k].second < probes[k - 1].second * (1.0 - kRoundoff)) ++violations;
        }
      }
    }
    d << violations << " violations";
    return violations == 0;
  });

  rec.run("param_choice", "kappa_regimes", [&](std::ostream& d) {
    const std::vector<double> ladder = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    auto ratio_trend = [&](double kappa) {
      const APrioriRule rule{1.0, kappa};
      const double first = ladder.front() * ladder.front() / choose_apriori(ladder.front(), rule);
      const double last = ladder.back() * ladder.back() / choose_apriori(ladder.back(), rule);
      return last / first;
    };
    const double below = ratio_trend(1.5);
    const double two = ratio_trend(2.0);
    const double above = ratio_trend(3.0);
    const bool flags = classify_kappa(2.0 + 2.0 / a, a) == KappaRegime::Borderline &&
                       !kappa_converges(2.0 + 2.0 / a, a) && kappa_converges(2.0, a) &&
                       !kappa_converges(3.0 + 2.0 / a, a);
    d << "delta^2/alpha end/start: kappa 1.5 -> " << below << ", 2 -> " << two << ", 3 -> "
      << above;
    return below < 1e-1 && rel_close(two, 1.0, 1e-12) && above > 10.0 && flags;
  });

  rec.run("param_choice", "apriori_error_decreases", [&](std::ostream& d) {
    ExperimentConfig c = cfg;
    c.delta_ladder = default_table1_ladder();
    c.rule = APrioriRule{1.0, 2.0};
    const auto rows = run_table1(c);
    d << "error " << rows.front().error << " -> " << rows.back().error;
    return !rows.front().failed && !rows.back().failed && rows.back().error < rows.front().error;
  });

  rec.run("param_choice", "discrepancy_trend", [&](std::ostream& d) {
    ExperimentConfig c = cfg;
    c.delta_ladder = default_table2_ladder();
    c.rule = DiscrepancyRule{};
    const auto rows = run_table2(c);
    d << "error " << rows.front().error << " -> " << rows.back().error << ", delta/alpha^s "
      << rows.front().noise_ratio << " -> " << rows.back().noise_ratio;
    return rows.back().error < rows.front().error &&
           rows.back().noise_ratio < rows.front().noise_ratio;
  });

  // ---- rates ----
  rec.run("rates", "qualification", [&](std::ostream& d) {
    bool ok = true;
    for (double theta : {0.0, 0.25, 0.5}) {
      const auto report = qualification_check(phi, p.scale, theta, decades(-2, -8), 1.0);
      d << "theta " << theta << ": worst " << report.worst_ratio << "; ";
      ok = ok && report.all_pass;
    }
    return ok;
  });

  rec.run("rates", "psi_inverse_roundtrip", [&](std::ostream& d) {
    double worst = 0.0;
    int max_iter = 0;
    double prev_alpha = 0.0;
    bool monotone = true;
    const double top = psi_eval(phi, a, phi.cutoff);
    for (int k = 0; k < 20; ++k) {
      const double delta = top * std::pow(10.0, -12.0 + 12.0 * k / 19.0);
      const auto inv = psi_inverse_detailed(phi, a, delta);
      worst = std::max(worst, std::abs(psi_eval(phi, a, inv.alpha) - delta) / delta);
      max_iter = std::max(max_iter, inv.iterations);
      monotone = monotone && inv.alpha >= prev_alpha;
      prev_alpha = inv.alpha;
    }
    d << "max relative error " << worst << ", max iterations " << max_iter;
    return worst <= 1e-12 && max_iter <= 200 && monotone;
  });

  rec.run("rates", "rate_functions_over_phi_bounded", [&](std::ostream& d) {
    double worst = 0.0;
    for (double e = -2.0; e >= -10.0; e -= 0.5) {
      const double alpha = std::pow(10.0, e);
      const AuxDiagnostics aux = rate_functions(p, alpha);
      const double ph = phi_eval(phi, alpha);
      worst = std::max({worst, aux.f1 / ph, aux.f2 / ph, aux.f3 / ph});
    }
    d << "max f_i/phi = " << worst << " (frozen bound " << kRateFunctionPhiBound << ")";
    return worst <= kRateFunctionPhiBound;
  });

  rec.run("rates", "log_rate_error_estimate", [&](std::ostream& d) {
    const double K0 = calibrate_K0(p, phi, decades(-2, -11));
    int violations = 0;
    for (double delta : {1e-3, 1e-4, 1e-5}) {
      const NoisySample smp = generate_noise(p, delta, base_seed + 8, cfg.noise_model);
      for (double e = -2.5; e >= -10.5; e -= 1.0) {
        const double alpha = std::pow(10.0, e);
        const double err = (options.solve(p, smp.data, alpha).u - p.exact_solution).norm();
        if (err > log_rate_bound(p, phi, K0, alpha, delta)) ++violations;
      }
    }
    d << "K0 = " << K0 << ", " << violations << " violations";
    return violations == 0;
  });

  return results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

void write_suite_report(std::ostream& out, const std::vector<PropertyResult>& results) {
  out << "module,property,status,detail\n";
  for (const auto& r : results) {
    std::string detail = r.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    out << r.module << ',' << r.name << ',' << (r.passed ? "pass" : "FAIL") << ',' << detail
        << '\n';
  }
}

}  // namespace hstik
