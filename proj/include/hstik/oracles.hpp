#pragma once

// Reference computations that deliberately avoid the production code
// paths: brute-force grids, bisection on derivative signs, direct sums.

namespace hstik::oracle {

/// (a (c x + x^2) - f)^2 + w (x - center)^2, evaluated and minimized
/// without the cubic root machinery.
struct ScalarQuartic {
  double a = 1.0;
  double c = 7.0;
  double f = 0.0;
  double w = 0.0;
  double center = 0.0;

  double value(double x) const;
  double slope(double x) const;
};

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Dense grid over [lo, hi] (grid_points samples) to locate the global
/// basin, then bisection on the sign of the derivative inside the
/// neighbouring cells down to `tolerance`.
ScalarMinimum grid_minimize(const ScalarQuartic& q, double lo = -10.0, double hi = 10.0,
                            int grid_points = 200001, double tolerance = 1e-13);

}  // namespace hstik::oracle
