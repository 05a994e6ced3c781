#include "maass/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "maass/error.hpp"
#include "maass/specfun.hpp"

namespace maass {
namespace {

GaussRule make_rule(int n) {
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    long double x = std::cos(kPiL * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      long double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-19L) break;
    }
    r.nodes[i] = static_cast<double>(x);
    r.weights[i] = static_cast<double>(2 / ((1 - x * x) * dp * dp));
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::mutex m;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(m);
  if (n < 1) throw Error(ErrorCode::domain, "Gauss rule needs at least one node");
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

std::vector<PanelNode> composite_nodes(double a, double b, int panels, int points) {
  const GaussRule& g = gauss_legendre(points);
  std::vector<PanelNode> out;
  out.reserve(static_cast<size_t>(panels) * points);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int i = 0; i < points; ++i) out.push_back({mid + 0.5 * h * g.nodes[i], 0.5 * h * g.weights[i]});
  }
  return out;
}

}  // namespace maass
