#include "fccs/uq.hpp"

#include <cmath>
#include <cstring>
#include <map>
#include <stdexcept>

#include "fccs/gauss.hpp"

namespace fccs {

namespace {

ModeFunctions constant_mode(double c) {
  ModeFunctions m;
  m.value = [c](double) { return c; };
  m.d1 = [](double) { return 0.0; };
  m.d2 = [](double) { return 0.0; };
  m.d3 = [](double) { return 0.0; };
  m.antideriv = [c](double x) { return c * x; };
  return m;
}

ModeFunctions sine_mode(double amp, int freq) {
  const double w = freq * M_PI;
  ModeFunctions m;
  m.value = [amp, w](double x) { return amp * std::sin(w * x); };
  m.d1 = [amp, w](double x) { return amp * w * std::cos(w * x); };
  m.d2 = [amp, w](double x) { return -amp * w * w * std::sin(w * x); };
  m.d3 = [amp, w](double x) { return -amp * w * w * w * std::cos(w * x); };
  m.antideriv = [amp, w](double x) { return amp * (1.0 - std::cos(w * x)) / w; };
  return m;
}

}  // namespace

RefractiveModel builtin_model(int d, double scale) {
  if (d < 0) throw std::invalid_argument("builtin_model: d must be >= 0");
  RefractiveModel m;
  m.d = d;
  m.n0 = constant_mode(1.0);
  for (int j = 1; j <= d; ++j) m.modes.push_back(sine_mode(scale * std::exp(-j), j));
  m.tag = "builtin";
  return m;
}

RefractiveModel sine_model(double n0, const std::vector<double>& amps,
                           const std::vector<int>& freqs) {
  if (amps.size() != freqs.size()) throw std::invalid_argument("sine_model: size mismatch");
  RefractiveModel m;
  m.d = static_cast<int>(amps.size());
  m.n0 = constant_mode(n0);
  for (size_t j = 0; j < amps.size(); ++j) m.modes.push_back(sine_mode(amps[j], freqs[j]));
  m.tag = "custom";
  return m;
}

double positivity_margin(const RefractiveModel& model, int samples) {
  double worst = 1e300;
  for (int i = 0; i <= samples; ++i) {
    const double x = static_cast<double>(i) / samples;
    double v = model.n0.value(x);
    for (const auto& mode : model.modes) v -= std::abs(mode.value(x));
    worst = std::min(worst, v);
  }
  if (worst <= 0.0)
    throw std::domain_error("refractive model violates the positivity condition");
  return worst;
}

std::vector<double> phase_vector(double x, const RefractiveModel& model) {
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("phase_vector: x outside [0,1]");
  std::vector<double> a(model.modes.size());
  for (size_t j = 0; j < model.modes.size(); ++j) {
    if (!model.modes[j].antideriv) throw std::invalid_argument("phase_vector: missing antiderivative");
    a[j] = model.modes[j].antideriv(x);
  }
  return a;
}

FieldSample sample_field(const RefractiveModel& model, const std::vector<double>& y) {
  if (y.size() != model.modes.size())
    throw std::invalid_argument("sample_field: sample dimension mismatch");
  FieldSample f;
  f.derivs = [model, y](double x) {
    FieldDerivs d;
    d.n = model.n0.value(x);
    d.d1 = model.n0.d1(x);
    d.d2 = model.n0.d2(x);
    d.d3 = model.n0.d3(x);
    for (size_t j = 0; j < y.size(); ++j) {
      d.n += model.modes[j].value(x) * y[j];
      d.d1 += model.modes[j].d1(x) * y[j];
      d.d2 += model.modes[j].d2(x) * y[j];
      d.d3 += model.modes[j].d3(x) * y[j];
    }
    return d;
  };
  f.antideriv = [model, y](double x) {
    double v = model.n0.antideriv(x);
    for (size_t j = 0; j < y.size(); ++j) v += model.modes[j].antideriv(x) * y[j];
    return v;
  };
  return f;
}

namespace {

// Precomputed per-mode field data at every x the HNA solver will request, so
// a sample evaluation is a dot product with y instead of trig calls.
class SampleTables {
 public:
  SampleTables(const RefractiveModel& model, const SpatialMesh& mesh) : model_(model) {
    const int NF = mesh.M * mesh.L;
    const double h = 1.0 / NF;
    std::vector<double> pts;
    pts.reserve(NF + 1 + NF * mesh.MG);
    for (int i = 0; i <= NF; ++i) pts.push_back(static_cast<double>(i) / NF);
    const GaussRule& gr = gauss_legendre(mesh.MG);
    for (int i = 0; i < NF; ++i) {
      const double xl = static_cast<double>(i) / NF, xr = static_cast<double>(i + 1) / NF;
      const double mid = 0.5 * (xl + xr);
      for (size_t q = 0; q < gr.nodes.size(); ++q) pts.push_back(mid + 0.5 * h * gr.nodes[q]);
    }
    xs_ = pts;
    const int nm = static_cast<int>(model.modes.size());
    base_.resize(pts.size());
    mode_.assign(nm, std::vector<FieldDerivs>(pts.size()));
    for (size_t i = 0; i < pts.size(); ++i) {
      const double x = pts[i];
      base_[i] = {model.n0.value(x), model.n0.d1(x), model.n0.d2(x), model.n0.d3(x)};
      for (int j = 0; j < nm; ++j)
        mode_[j][i] = {model.modes[j].value(x), model.modes[j].d1(x), model.modes[j].d2(x),
                       model.modes[j].d3(x)};
      unsigned long long bits;
      std::memcpy(&bits, &x, sizeof(bits));
      index_.emplace(bits, i);
    }
  }

  FieldSample field_for(const std::vector<double>& y) const {
    FieldSample f;
    f.derivs = [this, y](double x) {
      unsigned long long bits;
      std::memcpy(&bits, &x, sizeof(bits));
      auto it = index_.find(bits);
      if (it == index_.end()) return sample_field(model_, y).derivs(x);
      const size_t i = it->second;
      FieldDerivs d = base_[i];
      for (size_t j = 0; j < y.size(); ++j) {
        d.n += mode_[j][i].n * y[j];
        d.d1 += mode_[j][i].d1 * y[j];
        d.d2 += mode_[j][i].d2 * y[j];
        d.d3 += mode_[j][i].d3 * y[j];
      }
      return d;
    };
    f.antideriv = [this, y](double x) {
      double v = model_.n0.antideriv(x);
      for (size_t j = 0; j < y.size(); ++j) v += model_.modes[j].antideriv(x) * y[j];
      return v;
    };
    return f;
  }

 private:
  RefractiveModel model_;
  std::vector<double> xs_;
  std::vector<FieldDerivs> base_;
  std::vector<std::vector<FieldDerivs>> mode_;
  std::unordered_map<unsigned long long, size_t> index_;
};

struct SampleValues {
  cplx mu, nu, f_tilde;
};

}  // namespace

UQResult expectation_u1(double x, double k, const RefractiveModel& model, const SourceTerm& F,
                        cplx u_L, double n_inf, const UQMethod& method,
                        const SpatialMesh& mesh) {
  positivity_margin(model);
  const double mpos = x * mesh.M;
  const int mx = static_cast<int>(std::lround(mpos));
  if (std::abs(mpos - mx) > 1e-12 || mx < 0 || mx > mesh.M)
    throw std::invalid_argument("expectation_u1: x must be a coarse mesh node");
  const int d = model.d;
  const std::vector<double> a = phase_vector(x, model);
  const SampleTables tables(model, mesh);

  std::map<std::vector<double>, SampleValues> cache;
  long solves = 0;
  auto solve_at = [&](const std::vector<double>& y) -> const SampleValues& {
    auto it = cache.find(y);
    if (it == cache.end()) {
      HelmholtzProblem p;
      p.k = k;
      p.u_L = u_L;
      p.n_inf = n_inf;
      p.n = tables.field_for(y);
      p.F = F;
      HNASolution sol = solve_hna(p, mesh);
      SampleValues v{sol.mu_tilde[mx], sol.nu_tilde[mx], sol.F2x[mx] / (k * k)};
      it = cache.emplace(y, v).first;
      ++solves;
    }
    return it->second;
  };

  Integrand f_mu = [&](const std::vector<double>& y) { return solve_at(y).mu; };
  Integrand f_nu = [&](const std::vector<double>& y) { return solve_at(y).nu; };
  Integrand f_f = [&](const std::vector<double>& y) { return solve_at(y).f_tilde; };

  std::vector<double> neg_a(a);
  for (auto& v : neg_a) v = -v;

  UQResult res;
  const double norm = std::pow(0.5, d);
  if (d == 0) {
    const SampleValues& v = solve_at({});
    res.part_mu = v.mu;
    res.part_nu = v.nu;
    res.part_f = v.f_tilde;
    res.n_mu = res.n_nu = res.n_f = 1;
  } else if (method.kind == UQMethod::Kind::Standard) {
    SparseResult rm = fccs_integrate(f_mu, k, a, method.r, method.variant);
    SparseResult rn = fccs_integrate(f_nu, k, neg_a, method.r, method.variant);
    SparseResult rf = fccs_integrate(f_f, k, std::vector<double>(d, 0.0), method.r, method.variant);
    res.part_mu = norm * rm.value;
    res.part_nu = norm * rn.value;
    res.part_f = norm * rf.value;
    res.n_mu = static_cast<long>(rm.nodes);
    res.n_nu = static_cast<long>(rn.nodes);
    res.n_f = static_cast<long>(rf.nodes);
  } else {
    AdaptiveOptions omu;
    omu.tol = method.tau;
    omu.budget = method.budget;
    omu.variant = method.variant;
    AdaptiveOptions onu = omu;
    onu.tol = k * method.tau;  // relaxed: the nu amplitude is O(1/k)
    AdaptiveResult rm = adaptive_integrate(f_mu, k, a, omu);
    AdaptiveResult rn = adaptive_integrate(f_nu, k, neg_a, onu);
    AdaptiveResult rf = adaptive_integrate(f_f, k, std::vector<double>(d, 0.0), omu);
    res.part_mu = norm * rm.value;
    res.part_nu = norm * rn.value;
    res.part_f = norm * rf.value;
    res.n_mu = rm.evals;
    res.n_nu = rn.evals;
    res.n_f = rf.evals;
    res.budget_exhausted = rm.budget_exhausted || rn.budget_exhausted || rf.budget_exhausted;
  }
  res.n_solves = solves;
  const double N0x = model.n0.antideriv(x);
  const cplx E = std::polar(1.0, k * N0x);
  res.value = E * res.part_mu + res.part_nu / E + res.part_f;
  return res;
}

cplx reference_expectation(double x, double k, const RefractiveModel& model,
                           const SourceTerm& F, cplx u_L, double n_inf, int gauss_pts,
                           int fem_elements, long cap) {
  const int d = model.d;
  double total_d = 1.0;
  for (int j = 0; j < d; ++j) total_d *= gauss_pts;
  if (total_d > static_cast<double>(cap))
    throw std::invalid_argument("reference_expectation: " + std::to_string(total_d) +
                                " FEM solves exceed the cap of " + std::to_string(cap));
  const GaussRule& gr = gauss_legendre(gauss_pts);
  std::vector<int> idx(d, 0);
  std::vector<double> y(d);
  cplx acc = 0.0;
  const double norm = std::pow(0.5, d);
  while (true) {
    double w = 1.0;
    for (int j = 0; j < d; ++j) {
      y[j] = gr.nodes[idx[j]];
      w *= gr.weights[idx[j]];
    }
    HelmholtzProblem p;
    p.k = k;
    p.u_L = u_L;
    p.n_inf = n_inf;
    p.n = sample_field(model, y);
    p.F = F;
    FemResult fr = fem_solve(p, fem_elements);
    acc += w * fem_value(fr, x);
    if (d == 0) break;
    int j = d - 1;
    for (; j >= 0; --j) {
      if (++idx[j] < gauss_pts) break;
      idx[j] = 0;
    }
    if (j < 0) break;
  }
  return norm * acc;
}

}  // namespace fccs
