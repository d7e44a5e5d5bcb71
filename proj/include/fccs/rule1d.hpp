#pragma once

#include <functional>

#include "fccs/cheb.hpp"
#include "fccs/filon.hpp"

namespace fccs {

enum class Regime { Oscillatory, Standard };

// One-dimensional rule: sum_j node_weights[j] * g(nodes[j]) approximates
// int_{-1}^{1} g(y) e^{i omega y} dy.  Oscillatory regime (|omega| >= 1)
// uses the Filon weights; otherwise the plain CC rule is applied to the
// product g(y) e^{i omega y}.
struct Rule1D {
  double omega = 0.0;
  int level = 0;
  Regime regime = Regime::Standard;
  std::vector<double> nodes;
  std::vector<cplx> node_weights;
};

Rule1D build_rule(double omega, int level, Level1Variant variant = Level1Variant::Midpoint);

cplx apply_rule(const Rule1D& rule, const std::function<cplx(double)>& g);

cplx integrate_1d(const std::function<cplx(double)>& g, double omega, int level,
                  Level1Variant variant = Level1Variant::Midpoint);

}  // namespace fccs
