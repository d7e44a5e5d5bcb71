#include "fccs/fem.hpp"

#include <cmath>
#include <stdexcept>

#include "fccs/gauss.hpp"

namespace fccs {

FemResult fem_solve(const HelmholtzProblem& p, int n_elements) {
  if (n_elements < 2) throw std::invalid_argument("fem_solve: need at least 2 elements");
  const int ne = n_elements;
  const double h = 1.0 / ne;
  FemResult res;
  res.h = h;
  res.pollution_warning = (p.k * h > 0.1);

  const int nn = ne + 1;
  std::vector<cplx> lo(nn, 0.0), di(nn, 0.0), up(nn, 0.0), rhs(nn, 0.0);
  const GaussRule& gr = gauss_legendre(3);
  const double k2 = p.k * p.k;

  for (int e = 0; e < ne; ++e) {
    const double xl = e * h;
    // stiffness (exact) and 3-pt Gauss mass/load on the element
    double m00 = 0.0, m01 = 0.0, m11 = 0.0, b0 = 0.0, b1 = 0.0;
    for (size_t q = 0; q < gr.nodes.size(); ++q) {
      const double t = 0.5 * (1.0 + gr.nodes[q]);  // in [0,1]
      const double x = xl + t * h;
      const double w = 0.5 * h * gr.weights[q];
      const double nv = p.n.derivs(x).n;
      const double c = nv * nv;
      const double p0 = 1.0 - t, p1 = t;
      m00 += w * c * p0 * p0;
      m01 += w * c * p0 * p1;
      m11 += w * c * p1 * p1;
      const double fv = p.F.value(x);
      b0 += w * fv * p0;
      b1 += w * fv * p1;
    }
    const double s = 1.0 / h;  // int phi' phi' over element
    // A = -S + k^2 M (+ boundary term later)
    di[e] += -s + k2 * m00;
    di[e + 1] += -s + k2 * m11;
    up[e] += s + k2 * m01;
    lo[e + 1] += s + k2 * m01;
    rhs[e] += b0;
    rhs[e + 1] += b1;
  }
  di[ne] += cplx(0.0, p.k * p.n_inf);

  // Dirichlet at x = 0 by row replacement
  di[0] = 1.0;
  up[0] = 0.0;
  rhs[0] = p.u_L;

  // Thomas elimination
  for (int i = 1; i < nn; ++i) {
    if (std::abs(di[i - 1]) < 1e-300)
      throw std::runtime_error("fem_solve: singular tridiagonal system (resonance)");
    const cplx f = lo[i] / di[i - 1];
    di[i] -= f * up[i - 1];
    rhs[i] -= f * rhs[i - 1];
  }
  std::vector<cplx> u(nn);
  u[nn - 1] = rhs[nn - 1] / di[nn - 1];
  for (int i = nn - 2; i >= 0; --i) u[i] = (rhs[i] - up[i] * u[i + 1]) / di[i];

  res.x.resize(nn);
  for (int i = 0; i < nn; ++i) res.x[i] = i * h;
  res.u = std::move(u);
  return res;
}

cplx fem_value(const FemResult& r, double x) {
  const double pos = x / r.h;
  const long i = std::lround(pos);
  if (i < 0 || i >= static_cast<long>(r.u.size()) || std::abs(pos - i) > 1e-9)
    throw std::invalid_argument("fem_value: x is not a mesh node");
  return r.u[i];
}

}  // namespace fccs
