#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hstik/experiments.hpp"
#include "hstik/solver.hpp"

namespace hstik {

struct PropertyResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Solver used by the properties that probe the Tikhonov minimizer.
/// Swappable so that a deliberately broken solver can be shown to trip
/// the suite.
using SolveFn = std::function<RegResult(const ProblemSpec&, const SeqVector&, double)>;

struct SuiteOptions {
  SolveFn solve = minimize_tikhonov;
  /// Random vectors / samples per randomized property.
  int random_cases = 100;
};

/// Runs every structural property of the library against the problem
/// described by cfg (N, problem parameters, seeds, noise model).
std::vector<PropertyResult> run_invariant_suite(const ExperimentConfig& cfg,
                                                const SuiteOptions& options = {});

bool all_passed(const std::vector<PropertyResult>& results);

/// CSV: module,property,status,detail
void write_suite_report(std::ostream& out, const std::vector<PropertyResult>& results);

}  // namespace hstik
