#pragma once

#include <vector>

namespace maass {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Cached n-point Gauss-Legendre rule.
const GaussRule& gauss_legendre(int n);

struct PanelNode {
  double x;
  double w;
};

// Nodes of a composite rule with `panels` equal panels on [a, b].
std::vector<PanelNode> composite_nodes(double a, double b, int panels, int points);

}  // namespace maass
