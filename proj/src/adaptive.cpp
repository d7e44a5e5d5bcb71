#include "fccs/adaptive.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace fccs {

namespace {

class AdaptiveDriver {
 public:
  AdaptiveDriver(const Integrand& f, double k, const std::vector<double>& a,
                 const AdaptiveOptions& opt)
      : f_(f), opt_(opt), d_(static_cast<int>(a.size())) {
    split_ = phase_split(k, a);
    for (double ah : split_.a_hat) has_hat_ |= (ah != 0.0);
    rules_.resize(d_);
  }

  AdaptiveResult run() {
    MultiIndex l0(d_, 1);
    std::map<MultiIndex, double> active;  // index -> profit (lex-ordered)
    std::map<MultiIndex, char> old;
    const cplx d0 = surplus(l0);
    estimate_ = d0;
    active[l0] = profit(d0);

    AdaptiveResult res;
    while (true) {
      auto best = active.end();
      for (auto it = active.begin(); it != active.end(); ++it)
        if (best == active.end() || it->second > best->second) best = it;
      if (best == active.end()) break;
      res.max_profit = best->second;
      if (best->second <= opt_.tol) break;
      if (static_cast<long>(node_coords_.size()) >= opt_.budget) {
        res.budget_exhausted = true;
        break;
      }
      MultiIndex l = best->first;
      active.erase(best);
      old[l] = 1;
      for (int j = 0; j < d_; ++j) {
        MultiIndex m = l;
        m[j] += 1;
        int sum = 0;
        for (int e : m) sum += e;
        if (sum > opt_.max_sum) continue;
        if (active.count(m) || old.count(m)) continue;
        bool adm = true;
        for (int i = 0; i < d_ && adm; ++i) {
          if (m[i] <= 1) continue;
          MultiIndex b = m;
          b[i] -= 1;
          adm = old.count(b) > 0;
        }
        if (!adm) continue;
        const cplx dm = surplus(m);
        estimate_ += dm;
        active[m] = profit(dm);
      }
    }
    res.value = estimate_;
    res.evals = static_cast<long>(node_coords_.size());
    for (const auto& kv : old) res.old_set.push_back(kv.first);
    for (const auto& kv : active) res.active_set.push_back(kv.first);
    return res;
  }

 private:
  const Integrand& f_;
  const AdaptiveOptions& opt_;
  int d_;
  bool has_hat_ = false;
  PhaseSplit split_;
  cplx estimate_ = 0.0;
  std::vector<std::vector<Rule1D>> rules_;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, NodeKeyHash> node_keys_;
  std::vector<cplx> node_values_;
  std::vector<std::vector<double>> node_coords_;

  double profit(const cplx& delta) const {
    return std::abs(delta) / std::max(std::abs(estimate_), opt_.profit_floor);
  }

  const Rule1D& rule(int dim, int level) {
    auto& col = rules_[dim];
    while (static_cast<int>(col.size()) < level) {
      const int l = static_cast<int>(col.size()) + 1;
      const double om = (split_.a_tilde[dim] != 0.0) ? split_.omegas[dim] : 0.0;
      col.push_back(build_rule(om, l, opt_.variant));
    }
    return col[level - 1];
  }

  std::int64_t key_of(int level, int j) const {
    const std::int64_t D = std::int64_t(1) << kKeyBits;
    if (level == 1) {
      if (opt_.variant == Level1Variant::Midpoint) return D / 2;
      return (j == 0) ? 0 : D;
    }
    return static_cast<std::int64_t>(j) << (kKeyBits - (level - 1));
  }

  cplx sample(const std::vector<std::int64_t>& key) {
    auto it = node_keys_.find(key);
    if (it != node_keys_.end()) return node_values_[it->second];
    const std::int64_t D = std::int64_t(1) << kKeyBits;
    std::vector<double> y(d_);
    for (int j = 0; j < d_; ++j) y[j] = node_coord(key[j], D);
    cplx v = f_(y);
    if (has_hat_) {
      double ph = 0.0;
      for (int j = 0; j < d_; ++j) ph += split_.a_hat[j] * y[j];
      v *= std::polar(1.0, split_.k * ph);
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("adaptive_integrate: non-finite sample");
    node_keys_.emplace(key, node_values_.size());
    node_values_.push_back(v);
    node_coords_.push_back(std::move(y));
    return node_values_.back();
  }

  cplx tensor_value(const MultiIndex& m) {
    std::vector<const Rule1D*> rs(d_);
    for (int j = 0; j < d_; ++j) rs[j] = &rule(j, m[j]);
    std::vector<int> idx(d_, 0);
    std::vector<std::int64_t> key(d_);
    cplx acc = 0.0;
    while (true) {
      cplx w = 1.0;
      for (int j = 0; j < d_; ++j) {
        w *= rs[j]->node_weights[idx[j]];
        key[j] = key_of(m[j], idx[j]);
      }
      acc += w * sample(key);
      int j = d_ - 1;
      for (; j >= 0; --j) {
        if (++idx[j] < static_cast<int>(rs[j]->nodes.size())) break;
        idx[j] = 0;
      }
      if (j < 0) break;
    }
    return acc;
  }

  // Delta_l = sum over corners z of (-1)^|z| T(l - z), with T vanishing when
  // any component drops to level 0.
  cplx surplus(const MultiIndex& l) {
    cplx acc = 0.0;
    for (unsigned z = 0; z < (1u << d_); ++z) {
      MultiIndex m = l;
      int parity = 0;
      bool ok = true;
      for (int j = 0; j < d_; ++j) {
        if (z & (1u << j)) {
          ++parity;
          if (--m[j] < 1) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      acc += (parity % 2 == 0 ? 1.0 : -1.0) * tensor_value(m);
    }
    return acc;
  }
};

}  // namespace

AdaptiveResult adaptive_integrate(const Integrand& f, double k, const std::vector<double>& a,
                                  const AdaptiveOptions& opt) {
  if (opt.tol <= 0.0 || opt.budget < 1)
    throw std::invalid_argument("adaptive_integrate: need tol > 0 and budget >= 1");
  AdaptiveDriver drv(f, k, a, opt);
  return drv.run();
}

}  // namespace fccs
