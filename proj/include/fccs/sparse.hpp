#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>

#include "fccs/rule1d.hpp"

namespace fccs {

using MultiIndex = std::vector<int>;  // entries >= 1

using Integrand = std::function<cplx(const std::vector<double>&)>;

// All l >= 1 with |l| <= q, in lexicographic order; cardinality binom(q, d).
std::vector<MultiIndex> lambda_set(int q, int d);

struct CombTerm {
  MultiIndex idx;
  int coeff;
};

// Combination-technique coefficients: r <= |l| <= r+d-1,
// c_l = (-1)^(r+d-|l|-1) * binom(d-1, |l|-r); lexicographic order.
std::vector<CombTerm> combination_coeffs(int r, int d);

struct PhaseSplit {
  double k = 0.0;
  std::vector<double> a, a_tilde, a_hat, omegas;
};

// Oscillatory/standard split: dimension j is oscillatory iff k|a_j| >= 1.
PhaseSplit phase_split(double k, const std::vector<double>& a);

// Dyadic node key: angle index at a fixed reference resolution, so equal
// nodes from different levels collide exactly.
constexpr int kKeyBits = 30;

struct NodeKeyHash {
  size_t operator()(const std::vector<std::int64_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

class SparsePlan {
 public:
  SparsePlan(int d, int r, double k, std::vector<double> a,
             Level1Variant variant = Level1Variant::Midpoint);

  cplx integrate(const Integrand& f);
  std::size_t node_count() const { return node_keys_.size(); }
  const std::vector<CombTerm>& combination() const { return comb_; }
  const PhaseSplit& split() const { return split_; }

 private:
  int d_, r_;
  Level1Variant variant_;
  PhaseSplit split_;
  std::vector<CombTerm> comb_;
  std::vector<std::vector<Rule1D>> rules_;  // [dim][level-1]
  std::unordered_map<std::vector<std::int64_t>, std::size_t, NodeKeyHash> node_keys_;
  std::vector<std::vector<double>> node_coords_;

  std::int64_t key_of(int level, int j) const;
  void enumerate_nodes();
  friend long exact_node_count(int r, int d, Level1Variant variant);
};

struct SparseResult {
  cplx value;
  std::size_t nodes;
};

SparseResult fccs_integrate(const Integrand& f, double k, const std::vector<double>& a, int r,
                            Level1Variant variant = Level1Variant::Midpoint);

long exact_node_count(int r, int d, Level1Variant variant = Level1Variant::Midpoint);

// Sparse-grid cardinality estimate N(r,d) ~ (1/((d-1)! 2^d)) (1+(d-1)/r)^(d-1) 2^r r^(d-1).
double node_count_estimate(int r, int d);

// Full tensor-product plain CC rule with n_per_dim+1 points per dimension
// applied to the whole integrand f(y) e^{i k a.y} (comparison baseline).
cplx tensor_cc_integrate(const Integrand& f, double k, const std::vector<double>& a,
                         int n_per_dim);

}  // namespace fccs
