#pragma once

#include <limits>

#include "fccs/sparse.hpp"

namespace fccs {

struct AdaptiveOptions {
  double tol = 1e-6;
  long budget = 1000000;
  Level1Variant variant = Level1Variant::Midpoint;
  // Restrict admissible indices to |l| <= max_sum (used to check that the
  // surplus decomposition telescopes back to the combination formula).
  int max_sum = std::numeric_limits<int>::max();
  double profit_floor = 1e-30;
};

struct AdaptiveResult {
  cplx value = 0.0;
  long evals = 0;           // distinct integrand evaluations
  double max_profit = 0.0;  // residual profit over the active set at exit
  bool budget_exhausted = false;
  std::vector<MultiIndex> old_set;
  std::vector<MultiIndex> active_set;
};

AdaptiveResult adaptive_integrate(const Integrand& f, double k, const std::vector<double>& a,
                                  const AdaptiveOptions& opt);

}  // namespace fccs
