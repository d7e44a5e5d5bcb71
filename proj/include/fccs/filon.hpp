#pragma once

#include <memory>
#include <vector>

#include "fccs/cheb.hpp"

namespace fccs {

// Oscillatory moments W_n(omega) = int_{-1}^{1} T_n(y) e^{i omega y} dy.
struct WeightTable {
  double omega = 0.0;
  int max_degree = 0;
  std::vector<cplx> weights;  // W_0 .. W_N
};

// Closed-form table at omega = 0: W_n = 2/(1-n^2) for even n, 0 for odd n.
WeightTable weights_zero(int max_degree);

// Stable table for |omega| >= 1: forward recursion up to the turning point
// n ~ |omega|, then an Oliver-type tridiagonal solve for the tail.
WeightTable weights_osc(double omega, int max_degree);

// Brute-force composite Gauss-Legendre reference, accurate to ~1e-13.
cplx oracle_weight(double omega, int n);
std::vector<cplx> oracle_weight_table(double omega, int max_degree);

// Shared cache keyed by the exact bits of omega; tables grow monotonically.
std::shared_ptr<const WeightTable> cached_weights(double omega, int max_degree);

}  // namespace fccs
