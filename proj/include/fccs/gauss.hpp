#pragma once

#include <vector>

namespace fccs {

// Gauss-Legendre nodes and weights on [-1,1], Newton iteration on P_n.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // sum to 2
};

const GaussRule& gauss_legendre(int npoints);  // cached, immutable

}  // namespace fccs
