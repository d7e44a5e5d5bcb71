#include "fccs/sparse.hpp"

#include <cmath>
#include <stdexcept>

namespace fccs {

namespace {

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void lambda_rec(int q, int d, int dim, int used, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (dim == d) {
    out.push_back(cur);
    return;
  }
  const int remaining_min = d - dim - 1;  // dims after this one need >= 1 each
  for (int l = 1; used + l + remaining_min <= q; ++l) {
    cur[dim] = l;
    lambda_rec(q, d, dim + 1, used + l, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> lambda_set(int q, int d) {
  if (d < 1 || q < d) throw std::invalid_argument("lambda_set: need q >= d >= 1");
  std::vector<MultiIndex> out;
  MultiIndex cur(d);
  lambda_rec(q, d, 0, 0, cur, out);
  return out;
}

std::vector<CombTerm> combination_coeffs(int r, int d) {
  if (r < 1 || d < 1) throw std::invalid_argument("combination_coeffs: need r, d >= 1");
  std::vector<CombTerm> out;
  for (const auto& l : lambda_set(r + d - 1, d)) {
    int sum = 0;
    for (int e : l) sum += e;
    if (sum < r) continue;
    const int sign = ((r + d - sum - 1) % 2 == 0) ? 1 : -1;
    out.push_back({l, sign * static_cast<int>(binom(d - 1, sum - r) + 0.5)});
  }
  return out;
}

PhaseSplit phase_split(double k, const std::vector<double>& a) {
  if (k <= 0.0) throw std::invalid_argument("phase_split: k must be > 0");
  PhaseSplit s;
  s.k = k;
  s.a = a;
  s.a_tilde.resize(a.size());
  s.a_hat.resize(a.size());
  s.omegas.resize(a.size());
  for (size_t j = 0; j < a.size(); ++j) {
    s.omegas[j] = k * a[j];
    if (std::abs(s.omegas[j]) >= 1.0) {
      s.a_tilde[j] = a[j];
      s.a_hat[j] = 0.0;
    } else {
      s.a_tilde[j] = 0.0;
      s.a_hat[j] = a[j];
    }
  }
  return s;
}

std::int64_t SparsePlan::key_of(int level, int j) const {
  const std::int64_t D = std::int64_t(1) << kKeyBits;
  if (level == 1) {
    if (variant_ == Level1Variant::Midpoint) return D / 2;
    return (j == 0) ? 0 : D;
  }
  return static_cast<std::int64_t>(j) << (kKeyBits - (level - 1));
}

SparsePlan::SparsePlan(int d, int r, double k, std::vector<double> a, Level1Variant variant)
    : d_(d), r_(r), variant_(variant) {
  if (d < 1 || r < 1) throw std::invalid_argument("SparsePlan: need d, r >= 1");
  if (static_cast<int>(a.size()) != d) throw std::invalid_argument("SparsePlan: |a| != d");
  if (r > kKeyBits) throw std::invalid_argument("SparsePlan: r too large for node keys");
  split_ = phase_split(k, a);
  comb_ = combination_coeffs(r, d);
  rules_.resize(d);
  for (int j = 0; j < d; ++j) {
    const double om = (split_.a_hat[j] == 0.0 && split_.a_tilde[j] != 0.0) ? split_.omegas[j] : 0.0;
    rules_[j].reserve(r);
    for (int l = 1; l <= r; ++l) rules_[j].push_back(build_rule(om, l, variant));
  }
  enumerate_nodes();
}

void SparsePlan::enumerate_nodes() {
  std::vector<std::int64_t> key(d_);
  std::vector<int> idx(d_);
  for (const auto& term : comb_) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      for (int j = 0; j < d_; ++j) key[j] = key_of(term.idx[j], idx[j]);
      auto it = node_keys_.find(key);
      if (it == node_keys_.end()) {
        node_keys_.emplace(key, node_coords_.size());
        std::vector<double> y(d_);
        const std::int64_t D = std::int64_t(1) << kKeyBits;
        for (int j = 0; j < d_; ++j) y[j] = node_coord(key[j], D);
        node_coords_.push_back(std::move(y));
      }
      int j = d_ - 1;
      for (; j >= 0; --j) {
        if (++idx[j] < static_cast<int>(rules_[j][term.idx[j] - 1].nodes.size())) break;
        idx[j] = 0;
      }
      if (j < 0) break;
    }
  }
}

cplx SparsePlan::integrate(const Integrand& f) {
  bool has_hat = false;
  for (double ah : split_.a_hat) has_hat |= (ah != 0.0);
  std::vector<cplx> values(node_coords_.size());
  std::vector<char> done(node_coords_.size(), 0);
  auto sample = [&](std::size_t i) -> cplx {
    if (!done[i]) {
      const auto& y = node_coords_[i];
      cplx v = f(y);
      if (has_hat) {
        double ph = 0.0;
        for (int j = 0; j < d_; ++j) ph += split_.a_hat[j] * y[j];
        v *= std::polar(1.0, split_.k * ph);
      }
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::string msg = "fccs_integrate: non-finite sample at node (";
        for (int j = 0; j < d_; ++j) msg += std::to_string(y[j]) + (j + 1 < d_ ? "," : ")");
        throw std::runtime_error(msg);
      }
      values[i] = v;
      done[i] = 1;
    }
    return values[i];
  };

  cplx total = 0.0;
  std::vector<std::int64_t> key(d_);
  std::vector<int> idx(d_);
  for (const auto& term : comb_) {
    cplx part = 0.0;
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      cplx w = 1.0;
      for (int j = 0; j < d_; ++j) {
        const Rule1D& rule = rules_[j][term.idx[j] - 1];
        w *= rule.node_weights[idx[j]];
        key[j] = key_of(term.idx[j], idx[j]);
      }
      part += w * sample(node_keys_.at(key));
      int j = d_ - 1;
      for (; j >= 0; --j) {
        if (++idx[j] < static_cast<int>(rules_[j][term.idx[j] - 1].nodes.size())) break;
        idx[j] = 0;
      }
      if (j < 0) break;
    }
    total += static_cast<double>(term.coeff) * part;
  }
  return total;
}

SparseResult fccs_integrate(const Integrand& f, double k, const std::vector<double>& a, int r,
                            Level1Variant variant) {
  SparsePlan plan(static_cast<int>(a.size()), r, k, a, variant);
  const cplx v = plan.integrate(f);
  return {v, plan.node_count()};
}

long exact_node_count(int r, int d, Level1Variant variant) {
  SparsePlan plan(d, r, 1.0, std::vector<double>(d, 0.0), variant);
  return static_cast<long>(plan.node_count());
}

double node_count_estimate(int r, int d) {
  double fact = 1.0;
  for (int i = 2; i <= d - 1; ++i) fact *= i;
  return 1.0 / (fact * std::pow(2.0, d)) *
         std::pow(1.0 + static_cast<double>(d - 1) / r, d - 1) * std::pow(2.0, r) *
         std::pow(static_cast<double>(r), d - 1);
}

cplx tensor_cc_integrate(const Integrand& f, double k, const std::vector<double>& a,
                         int n_per_dim) {
  const int d = static_cast<int>(a.size());
  const int n = n_per_dim;
  if (d < 1 || n < 1) throw std::invalid_argument("tensor_cc_integrate: need d >= 1, n >= 1");
  // plain CC weights for arbitrary n (direct O(n^2) composition)
  std::vector<double> nodes(n + 1), w(n + 1);
  const WeightTable wz = weights_zero(n);
  for (int j = 0; j <= n; ++j) {
    nodes[j] = node_coord(j, n);
    double acc = 0.5 * (wz.weights[0].real() +
                        wz.weights[n].real() * std::cos(static_cast<double>(j) * M_PI));
    for (int m = 1; m < n; ++m)
      acc += wz.weights[m].real() * std::cos(static_cast<double>(j) * m * M_PI / n);
    acc *= 2.0 / n;
    if (j == 0 || j == n) acc *= 0.5;
    w[j] = acc;
  }
  std::vector<int> idx(d, 0);
  std::vector<double> y(d);
  cplx total = 0.0;
  while (true) {
    double wp = 1.0, ph = 0.0;
    for (int j = 0; j < d; ++j) {
      y[j] = nodes[idx[j]];
      wp *= w[idx[j]];
      ph += a[j] * y[j];
    }
    total += wp * f(y) * std::polar(1.0, k * ph);
    int j = d - 1;
    for (; j >= 0; --j) {
      if (++idx[j] <= n) break;
      idx[j] = 0;
    }
    if (j < 0) break;
  }
  return total;
}

}  // namespace fccs
