#pragma once

#include "fccs/helmholtz.hpp"

namespace fccs {

struct FemResult {
  std::vector<double> x;  // nodes, x_i = i*h
  std::vector<cplx> u;    // nodal solution
  double h = 0.0;
  bool pollution_warning = false;  // k*h > 0.1
};

// P1 Galerkin solve of u'' + k^2 n^2 u = F, u(0) = u_L, u'(1) = i k n_inf u(1).
// Weak form: -int u'v' + k^2 int n^2 u v + i k n_inf u(1) v(1) = int F v,
// obtained by one integration by parts with the Robin flux substituted;
// Dirichlet row replaced exactly.  Element integrals use 3-point Gauss and the
// complex tridiagonal system is eliminated directly (Thomas).
FemResult fem_solve(const HelmholtzProblem& p, int n_elements);

cplx fem_value(const FemResult& r, double x);  // nodal lookup (nearest node)

}  // namespace fccs
