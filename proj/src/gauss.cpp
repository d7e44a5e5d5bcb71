#include "fccs/gauss.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fccs {

namespace {

GaussRule compute_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: npoints must be >= 1");
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[n - 1 - i] = r.weights[i];
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int npoints) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(npoints);
  if (it == cache.end()) it = cache.emplace(npoints, compute_rule(npoints)).first;
  return it->second;
}

}  // namespace fccs
