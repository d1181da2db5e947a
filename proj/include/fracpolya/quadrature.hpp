#pragma once

#include <vector>

namespace fracpolya {

// Gauss-Legendre rule mapped to [0, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int points);

struct QuadratureSpec {
  int panel_nodes = 16;
  // Target absolute error per stiffness entry.
  double abs_tol = 1e-10;
  // Share of abs_tol the truncated tail [Xi, inf) may consume.
  double tail_fraction = 0.5;
  int max_doublings = 20;

  void validate() const;
};

}  // namespace fracpolya
