#include "fccs/filon.hpp"

#include <cmath>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "fccs/gauss.hpp"

namespace fccs {

WeightTable weights_zero(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("weights_zero: negative degree");
  WeightTable t;
  t.omega = 0.0;
  t.max_degree = max_degree;
  t.weights.resize(max_degree + 1);
  for (int n = 0; n <= max_degree; ++n)
    t.weights[n] = (n % 2 == 1) ? 0.0 : 2.0 / (1.0 - static_cast<double>(n) * n);
  return t;
}

namespace {

constexpr int kTailBuffer = 64;

// Solves the moment recurrence written as the tridiagonal system
//   -(i w/(n-1)) W_{n-1} + 2 W_n + (i w/(n+1)) W_{n+1} = -2 G_n/(n^2-1)
// for n = base+1 .. top, with W_base known and W_{top+1} set to 0 (the
// truncation error decays geometrically into the interior).
void tail_solve(std::vector<cplx>& w, int base, int top, double ao) {
  const int m = top - base;
  if (m <= 0) return;
  const cplx iw(0.0, ao);
  const double c2 = 2.0 * std::cos(ao), s2 = 2.0 * std::sin(ao);
  std::vector<cplx> diag(m, 2.0), sup(m), rhs(m);
  for (int i = 0; i < m; ++i) {
    const int n = base + 1 + i;
    const cplx gn = (n % 2 == 0) ? cplx(c2, 0.0) : cplx(0.0, s2);
    sup[i] = iw / static_cast<double>(n + 1);
    rhs[i] = -2.0 * gn / (static_cast<double>(n) * n - 1.0);
  }
  // subdiagonal a_i = -i w/(n-1); first row folds in the known W_base.
  rhs[0] += iw / static_cast<double>(base) * w[base];
  for (int i = 1; i < m; ++i) {
    const int n = base + 1 + i;
    const cplx a = -iw / static_cast<double>(n - 1);
    const cplx f = a / diag[i - 1];
    diag[i] -= f * sup[i - 1];
    rhs[i] -= f * rhs[i - 1];
  }
  std::vector<cplx> sol(m);
  sol[m - 1] = rhs[m - 1] / diag[m - 1];
  for (int i = m - 2; i >= 0; --i) sol[i] = (rhs[i] - sup[i] * sol[i + 1]) / diag[i];
  for (int i = 0; i < m; ++i)
    if (base + 1 + i < static_cast<int>(w.size())) w[base + 1 + i] = sol[i];
}

std::vector<cplx> osc_table_positive(double ao, int N) {
  const cplx iw(0.0, ao);
  const double s = std::sin(ao), c = std::cos(ao);
  const int NP = N + kTailBuffer;
  std::vector<cplx> w(NP + 1);
  w[0] = 2.0 * s / ao;
  w[1] = cplx(0.0, 2.0 * (s - ao * c) / (ao * ao));
  if (NP >= 2) w[2] = (cplx(0.0, 2.0 * s) - 4.0 * w[1]) / iw;
  // Forward recursion is stable while n stays below the turning point |omega|.
  const int n0 = static_cast<int>(std::ceil(ao));
  const int base = std::min(NP, std::max(2, n0));
  for (int n = 2; n + 1 <= base; ++n) {
    const cplx gn = (n % 2 == 0) ? cplx(2.0 * c, 0.0) : cplx(0.0, 2.0 * s);
    w[n + 1] = static_cast<double>(n + 1) / iw *
               (-2.0 * gn / (static_cast<double>(n) * n - 1.0) - 2.0 * w[n] +
                iw / static_cast<double>(n - 1) * w[n - 1]);
  }
  tail_solve(w, base, NP, ao);
  w.resize(N + 1);
  return w;
}

}  // namespace

WeightTable weights_osc(double omega, int max_degree) {
  if (std::abs(omega) < 1.0)
    throw std::domain_error("weights_osc: |omega| < 1 is the standard CC regime");
  if (max_degree < 0) throw std::invalid_argument("weights_osc: negative degree");
  WeightTable t;
  t.omega = omega;
  t.max_degree = max_degree;
  t.weights = osc_table_positive(std::abs(omega), max_degree);
  if (omega < 0.0)
    for (auto& v : t.weights) v = std::conj(v);
  return t;
}

std::vector<cplx> oracle_weight_table(double omega, int max_degree) {
  // Substituting y = cos(theta) gives int_0^pi cos(n theta) e^{i w cos theta}
  // sin(theta) dtheta, whose local frequency is bounded by n + |w| everywhere
  // (in y the Chebyshev factor oscillates unboundedly fast at the endpoints).
  const int N = max_degree;
  const int panels = static_cast<int>(std::ceil((N + std::abs(omega)) / 4.0)) + 4;
  const GaussRule& gr = gauss_legendre(16);
  std::vector<cplx> acc(N + 1, 0.0);
  const double hw = M_PI / (2.0 * panels);  // half-width of each theta panel
  for (int p = 0; p < panels; ++p) {
    const double mid = (2.0 * p + 1.0) * hw;
    for (size_t q = 0; q < gr.nodes.size(); ++q) {
      const double th = mid + hw * gr.nodes[q];
      const double c = std::cos(th);
      const cplx e = hw * gr.weights[q] * std::sin(th) * std::polar(1.0, omega * c);
      double t0 = 1.0, t1 = c;  // cos(n theta) by recurrence
      acc[0] += e;
      if (N >= 1) acc[1] += e * t1;
      for (int n = 2; n <= N; ++n) {
        const double t2 = 2.0 * c * t1 - t0;
        acc[n] += e * t2;
        t0 = t1;
        t1 = t2;
      }
    }
  }
  return acc;
}

cplx oracle_weight(double omega, int n) { return oracle_weight_table(omega, n)[n]; }

std::shared_ptr<const WeightTable> cached_weights(double omega, int max_degree) {
  static std::mutex mu;
  static std::unordered_map<unsigned long long, std::shared_ptr<const WeightTable>> cache;
  unsigned long long key;
  static_assert(sizeof(key) == sizeof(omega));
  std::memcpy(&key, &omega, sizeof(key));
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end() && it->second->max_degree >= max_degree) return it->second;
  auto table = std::make_shared<WeightTable>(
      omega == 0.0 ? weights_zero(max_degree) : weights_osc(omega, max_degree));
  cache[key] = table;
  return table;
}

}  // namespace fccs
