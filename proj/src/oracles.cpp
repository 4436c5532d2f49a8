#include "hstik/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace hstik::oracle {

double ScalarQuartic::value(double x) const {
  const double r = a * c * x + a * x * x - f;
  return r * r + w * (x - center) * (x - center);
}

double ScalarQuartic::slope(double x) const {
  const double r = a * c * x + a * x * x - f;
  return 2.0 * r * (a * c + 2.0 * a * x) + 2.0 * w * (x - center);
}

ScalarMinimum grid_minimize(const ScalarQuartic& q, double lo, double hi, int grid_points,
                            double tolerance) {
  const double step = (hi - lo) / (grid_points - 1);
  int best = 0;
  double best_value = q.value(lo);
  for (int k = 1; k < grid_points; ++k) {
    const double v = q.value(lo + k * step);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }

  // The derivative is <= 0 to the left of the minimizer and >= 0 to the
  // right; bisect on its sign within one cell either side.
  double left = lo + std::max(best - 1, 0) * step;
  double right = lo + std::min(best + 1, grid_points - 1) * step;
  if (q.slope(left) > 0.0 || q.slope(right) < 0.0) {
    return {lo + best * step, best_value};
  }
  while (right - left > tolerance) {
    const double mid = 0.5 * (left + right);
    if (mid == left || mid == right) break;
    if (q.slope(mid) < 0.0) {
      left = mid;
    } else {
      right = mid;
    }
  }
  const double x = 0.5 * (left + right);
  return {x, q.value(x)};
}

}  // namespace hstik::oracle
