#include "fccs/rule1d.hpp"

#include <cmath>
#include <stdexcept>

namespace fccs {

namespace {

// w_j = h_j * (2/n) sum''_m W_m cos(j m pi / n), h_j = 1/2 at the endpoints.
std::vector<cplx> compose_weights(const std::vector<cplx>& moments) {
  std::vector<cplx> w = dct_apply(moments);
  const size_t n = w.size() - 1;
  w[0] *= 0.5;
  w[n] *= 0.5;
  return w;
}

}  // namespace

Rule1D build_rule(double omega, int level, Level1Variant variant) {
  if (level < 1) throw std::invalid_argument("build_rule: level must be >= 1");
  Rule1D r;
  r.omega = omega;
  r.level = level;
  r.regime = (std::abs(omega) >= 1.0) ? Regime::Oscillatory : Regime::Standard;
  const ChebLevel grid = cc_nodes(level, variant);
  r.nodes = grid.nodes;

  if (level == 1) {
    if (variant == Level1Variant::Midpoint) {
      if (r.regime == Regime::Oscillatory)
        r.node_weights = {cached_weights(omega, 0)->weights[0]};
      else
        r.node_weights = {cplx(2.0, 0.0)};  // 2 g(0), e^{i omega * 0} = 1
    } else {
      if (r.regime == Regime::Oscillatory) {
        auto t = cached_weights(omega, 1);
        // linear interpolant hat weights (W0 +- W1)/2 at y = +-1
        r.node_weights = {0.5 * (t->weights[0] + t->weights[1]),
                          0.5 * (t->weights[0] - t->weights[1])};
      } else {
        // trapezoid weights 1,1 applied to g(y) e^{i omega y}
        r.node_weights = {std::polar(1.0, omega), std::polar(1.0, -omega)};
      }
    }
    return r;
  }

  const int n = grid.degree;
  if (r.regime == Regime::Oscillatory) {
    auto t = cached_weights(omega, n);
    std::vector<cplx> m(t->weights.begin(), t->weights.begin() + n + 1);
    r.node_weights = compose_weights(m);
  } else {
    auto t = cached_weights(0.0, n);
    std::vector<cplx> m(t->weights.begin(), t->weights.begin() + n + 1);
    std::vector<cplx> cc = compose_weights(m);
    r.node_weights.resize(cc.size());
    for (size_t j = 0; j < cc.size(); ++j)
      r.node_weights[j] = cc[j] * std::polar(1.0, omega * r.nodes[j]);
  }
  return r;
}

cplx apply_rule(const Rule1D& rule, const std::function<cplx(double)>& g) {
  cplx acc = 0.0;
  for (size_t j = 0; j < rule.nodes.size(); ++j) {
    const cplx v = g(rule.nodes[j]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("integrate_1d: non-finite sample at node " +
                               std::to_string(rule.nodes[j]));
    acc += rule.node_weights[j] * v;
  }
  return acc;
}

cplx integrate_1d(const std::function<cplx(double)>& g, double omega, int level,
                  Level1Variant variant) {
  return apply_rule(build_rule(omega, level, variant), g);
}

}  // namespace fccs
