#include "fracpolya/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "fracpolya/errors.hpp"

namespace fracpolya {

GaussLegendreRule gauss_legendre(int points) {
  if (points < 1) throw InputError("Gauss-Legendre rule needs >= 1 point");
  GaussLegendreRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  const int half = (points + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= points; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= points; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = points == 1 ? 1.0 : points * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Map [-1, 1] -> [0, 1]; ascending order.
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.nodes[points - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[i] = 0.5 * w;
    rule.weights[points - 1 - i] = 0.5 * w;
  }
  return rule;
}

void QuadratureSpec::validate() const {
  if (panel_nodes < 8) throw InputError("panel_nodes must be >= 8");
  if (!(abs_tol > 0.0)) throw InputError("abs_tol must be positive");
  if (!(tail_fraction > 0.0 && tail_fraction < 1.0)) {
    throw InputError("tail_fraction must lie in (0, 1)");
  }
  if (max_doublings < 1) throw InputError("max_doublings must be >= 1");
}

}  // namespace fracpolya
