#include "fccs/helmholtz.hpp"

#include <cmath>
#include <stdexcept>

#include "fccs/gauss.hpp"

namespace fccs {

FieldSample constant_field(double n0) {
  FieldSample f;
  f.derivs = [n0](double) { return FieldDerivs{n0, 0.0, 0.0, 0.0}; };
  f.antideriv = [n0](double x) { return n0 * x; };
  return f;
}

SourceTerm zero_source() {
  return {[](double) { return 0.0; }, [](double) { return 0.0; }};
}

SourceTerm linear_source() {
  return {[](double x) { return x; }, [](double) { return 1.0; }};
}

FSeq f_sequence(const HelmholtzProblem& p) {
  FSeq s;
  const FieldSample n = p.n;
  const SourceTerm F = p.F;
  auto nv = [n](double x) {
    const double v = n.derivs(x).n;
    if (v <= 0.0) throw std::domain_error("f_sequence: refractive index not positive");
    return v;
  };
  s.F2 = [F, nv](double x) {
    const double v = nv(x);
    return F.value(x) / (v * v);
  };
  s.F2p = [F, n, nv](double x) {
    const FieldDerivs fd = n.derivs(x);
    const double v = nv(x);
    return F.d1(x) / (v * v) - 2.0 * F.value(x) * fd.d1 / (v * v * v);
  };
  s.F2_at_0 = s.F2(0.0);
  s.BR_F2 = s.F2p(1.0) - cplx(0.0, p.k * p.n_inf) * s.F2(1.0);
  return s;
}

void check_field(const HelmholtzProblem& p, int samples, double fd_tol) {
  const double eps = 1e-5;
  for (int i = 0; i <= samples; ++i) {
    const double x = std::min(1.0 - eps, std::max(eps, static_cast<double>(i) / samples));
    const FieldDerivs f = p.n.derivs(x);
    if (f.n <= 0.0) throw std::domain_error("check_field: n must be positive on [0,1]");
    const FieldDerivs fp = p.n.derivs(x + eps), fm = p.n.derivs(x - eps);
    if (std::abs((fp.n - fm.n) / (2 * eps) - f.d1) > fd_tol * (1.0 + std::abs(f.d1)))
      throw std::domain_error("check_field: n' inconsistent with n");
    if (std::abs((fp.d1 - fm.d1) / (2 * eps) - f.d2) > fd_tol * (1.0 + std::abs(f.d2)))
      throw std::domain_error("check_field: n'' inconsistent with n'");
    if (std::abs((fp.d2 - fm.d2) / (2 * eps) - f.d3) > fd_tol * (1.0 + std::abs(f.d3)))
      throw std::domain_error("check_field: n''' inconsistent with n''");
    if (std::abs((p.n.antideriv(x + eps) - p.n.antideriv(x - eps)) / (2 * eps) - f.n) >
        fd_tol * (1.0 + std::abs(f.n)))
      throw std::domain_error("check_field: antiderivative inconsistent with n");
  }
}

namespace {

// powers of n^{-1/2} and its derivatives
struct SFuncs {
  double s0, s1, s2, s3;
};

SFuncs sfuncs(const FieldDerivs& f) {
  if (f.n <= 0.0) throw std::domain_error("solve_hna: refractive index not positive");
  const double n = f.n, np = f.d1, npp = f.d2, nppp = f.d3;
  const double nm12 = 1.0 / std::sqrt(n);
  const double nm32 = nm12 / n, nm52 = nm32 / n, nm72 = nm52 / n;
  SFuncs s;
  s.s0 = nm12;
  s.s1 = -0.5 * np * nm32;
  s.s2 = 0.75 * np * np * nm52 - 0.5 * npp * nm32;
  s.s3 = -1.875 * np * np * np * nm72 + 2.25 * np * npp * nm52 - 0.5 * nppp * nm32;
  return s;
}

struct BCResult {
  cplx a1, a2;
  double cond;
};

// Solves the 2x2 system for (alpha^1, alpha^2) of r_j = mu_j xi + nu_j / xi:
//   B_L r_j = rhsL,  B_R r_j = rhsR,  B_R g = g'(1) - i k n_inf g(1).
BCResult solve_bc(double k, double n_inf, const FieldDerivs& f0, const FieldDerivs& f1,
                  double N1, cplx rhsL, cplx rhsR, cplx muP1, cplx muPp1, cplx nuP1,
                  cplx nuPp1) {
  const SFuncs sa = sfuncs(f0), sb = sfuncs(f1);
  const cplx E = std::polar(1.0, k * N1);
  const cplx ik(0.0, k);
  const cplx CA = (sb.s1 + ik * (f1.n - n_inf) * sb.s0) * E;
  const cplx CB = (sb.s1 - ik * (f1.n + n_inf) * sb.s0) / E;
  const cplx PR = (muPp1 + ik * (f1.n - n_inf) * muP1) * E + (nuPp1 - ik * (f1.n + n_inf) * nuP1) / E;
  const cplx den = CB - CA;
  const double scale = std::abs(CA) + std::abs(CB) + 1.0;
  if (std::abs(den) < 1e-14 * scale)
    throw std::runtime_error("solve_hna: near-resonant boundary system, cond ~ " +
                             std::to_string(scale / std::max(std::abs(den), 1e-300)));
  BCResult r;
  r.a2 = (rhsR - PR - CA * rhsL / sa.s0) / den;
  r.a1 = rhsL / sa.s0 - r.a2;
  r.cond = scale / std::abs(den);
  return r;
}

}  // namespace

HNASolution solve_hna(const HelmholtzProblem& p, const SpatialMesh& mesh) {
  if (mesh.M < 1 || mesh.L < 2 || mesh.L % 2 != 0 || mesh.MG < 2)
    throw std::invalid_argument("solve_hna: need M >= 1, even L >= 2, MG >= 2");
  if (p.k <= 0.0) throw std::invalid_argument("solve_hna: k must be positive");
  const int NF = mesh.M * mesh.L;
  const double h = 1.0 / NF;
  const cplx ih2(0.0, 0.5);  // i/2
  const cplx ik(0.0, p.k);

  HNASolution sol;
  sol.k = p.k;
  sol.n_inf = p.n_inf;

  // field data at fine nodes
  std::vector<double> xf(NF + 1);
  std::vector<SFuncs> sf(NF + 1);
  std::vector<FieldDerivs> fd(NF + 1);
  for (int i = 0; i <= NF; ++i) {
    xf[i] = static_cast<double>(i) / NF;
    fd[i] = p.n.derivs(xf[i]);
    sf[i] = sfuncs(fd[i]);
  }

  // cumulative base integral J(x) = int_0^x (n^{-1/2})''(s) n(s)^{-1/2} ds by
  // MG-point Gauss panels on each fine subinterval
  const GaussRule& gr = gauss_legendre(mesh.MG);
  std::vector<double> J(NF + 1, 0.0);
  for (int i = 0; i < NF; ++i) {
    const double mid = 0.5 * (xf[i] + xf[i + 1]);
    double acc = 0.0;
    for (size_t q = 0; q < gr.nodes.size(); ++q) {
      const double x = mid + 0.5 * h * gr.nodes[q];
      const SFuncs s = sfuncs(p.n.derivs(x));
      acc += gr.weights[q] * s.s2 * s.s0;
    }
    J[i + 1] = J[i] + 0.5 * h * acc;
  }

  const FieldDerivs f0 = fd[0], f1 = fd[NF];
  const SFuncs s1f = sf[NF];
  const double N1 = p.n.antideriv(1.0);

  // order 0
  const BCResult b0 = solve_bc(p.k, p.n_inf, f0, f1, N1, p.u_L, 0.0, 0, 0, 0, 0);
  sol.alpha[0][0] = b0.a1;
  sol.alpha[0][1] = b0.a2;
  sol.cond[0] = b0.cond;

  // order 1: I_1^mu = alpha_0^1 J, I_1^nu = alpha_0^2 J
  const cplx I1mu_1 = b0.a1 * J[NF], I1nu_1 = b0.a2 * J[NF];
  const cplx mu0pp_1 = b0.a1 * s1f.s2, nu0pp_1 = b0.a2 * s1f.s2;
  const cplx mu1P_1 = ih2 * s1f.s0 * I1mu_1;
  const cplx mu1Pp_1 = ih2 * (s1f.s1 * I1mu_1 + mu0pp_1 / f1.n);
  const cplx nu1P_1 = -ih2 * s1f.s0 * I1nu_1;
  const cplx nu1Pp_1 = -ih2 * (s1f.s1 * I1nu_1 + nu0pp_1 / f1.n);
  const BCResult b1 =
      solve_bc(p.k, p.n_inf, f0, f1, N1, 0.0, 0.0, mu1P_1, mu1Pp_1, nu1P_1, nu1Pp_1);
  sol.alpha[1][0] = b1.a1;
  sol.alpha[1][1] = b1.a2;
  sol.cond[1] = b1.cond;

  std::vector<cplx> mu1(NF + 1), nu1(NF + 1), mu1pp(NF + 1), nu1pp(NF + 1);
  for (int i = 0; i <= NF; ++i) {
    const cplx I1m = b0.a1 * J[i], I1n = b0.a2 * J[i];
    mu1[i] = b1.a1 * sf[i].s0 + ih2 * sf[i].s0 * I1m;
    nu1[i] = b1.a2 * sf[i].s0 - ih2 * sf[i].s0 * I1n;
    const double n = fd[i].n, np = fd[i].d1;
    const cplx mu0pp = b0.a1 * sf[i].s2, mu0ppp = b0.a1 * sf[i].s3;
    const cplx nu0pp = b0.a2 * sf[i].s2, nu0ppp = b0.a2 * sf[i].s3;
    mu1pp[i] = b1.a1 * sf[i].s2 +
               ih2 * (sf[i].s2 * I1m - 1.5 * np / (n * n) * mu0pp + mu0ppp / n);
    nu1pp[i] = b1.a2 * sf[i].s2 -
               ih2 * (sf[i].s2 * I1n - 1.5 * np / (n * n) * nu0pp + nu0ppp / n);
  }

  // order 2: I_2 by composite Simpson over the fine nodes, cumulative at the
  // coarse nodes
  std::vector<cplx> I2mu(mesh.M + 1, 0.0), I2nu(mesh.M + 1, 0.0);
  for (int m = 0; m < mesh.M; ++m) {
    cplx am = 0.0, an = 0.0;
    const int base = m * mesh.L;
    for (int l = 0; l <= mesh.L; ++l) {
      const double w = (l == 0 || l == mesh.L) ? 1.0 : (l % 2 == 1 ? 4.0 : 2.0);
      am += w * mu1pp[base + l] * sf[base + l].s0;
      an += w * nu1pp[base + l] * sf[base + l].s0;
    }
    I2mu[m + 1] = I2mu[m] + h / 3.0 * am;
    I2nu[m + 1] = I2nu[m] + h / 3.0 * an;
  }

  const FSeq fs = f_sequence(p);
  const cplx mu2P_1 = ih2 * s1f.s0 * I2mu[mesh.M];
  const cplx mu2Pp_1 = ih2 * (s1f.s1 * I2mu[mesh.M] + mu1pp[NF] / f1.n);
  const cplx nu2P_1 = -ih2 * s1f.s0 * I2nu[mesh.M];
  const cplx nu2Pp_1 = -ih2 * (s1f.s1 * I2nu[mesh.M] + nu1pp[NF] / f1.n);
  const BCResult b2 = solve_bc(p.k, p.n_inf, f0, f1, N1, -fs.F2_at_0, -fs.BR_F2, mu2P_1,
                               mu2Pp_1, nu2P_1, nu2Pp_1);
  sol.alpha[2][0] = b2.a1;
  sol.alpha[2][1] = b2.a2;
  sol.cond[2] = b2.cond;

  // assemble coarse-node values
  const int M = mesh.M;
  sol.xs.resize(M + 1);
  sol.Nx.resize(M + 1);
  sol.F2x.resize(M + 1);
  sol.mu0.resize(M + 1);
  sol.mu1.resize(M + 1);
  sol.mu2.resize(M + 1);
  sol.nu0.resize(M + 1);
  sol.nu1.resize(M + 1);
  sol.nu2.resize(M + 1);
  sol.mu_tilde.resize(M + 1);
  sol.nu_tilde.resize(M + 1);
  for (int m = 0; m <= M; ++m) {
    const int i = m * mesh.L;
    sol.xs[m] = xf[i];
    sol.Nx[m] = (m == 0) ? 0.0 : p.n.antideriv(xf[i]);
    sol.F2x[m] = fs.F2(xf[i]);
    sol.mu0[m] = b0.a1 * sf[i].s0;
    sol.nu0[m] = b0.a2 * sf[i].s0;
    sol.mu1[m] = mu1[i];
    sol.nu1[m] = nu1[i];
    sol.mu2[m] = b2.a1 * sf[i].s0 + ih2 * sf[i].s0 * I2mu[m];
    sol.nu2[m] = b2.a2 * sf[i].s0 - ih2 * sf[i].s0 * I2nu[m];
    sol.mu_tilde[m] = sol.mu0[m] + sol.mu1[m] / p.k + sol.mu2[m] / (p.k * p.k);
    sol.nu_tilde[m] = sol.nu0[m] + sol.nu1[m] / p.k + sol.nu2[m] / (p.k * p.k);
  }

  // boundary residuals of the assembled expansion
  const double k2 = p.k * p.k;
  sol.bl_residual = sol.mu_tilde[0] + sol.nu_tilde[0] + fs.F2_at_0 / k2 - p.u_L;
  {
    const cplx E = std::polar(1.0, p.k * N1);
    // mu_tilde'(1) and nu_tilde'(1) from the analytic pieces
    const cplx mu0p = b0.a1 * s1f.s1;
    const cplx nu0p = b0.a2 * s1f.s1;
    const cplx mu1p = b1.a1 * s1f.s1 + ih2 * (s1f.s1 * I1mu_1 + mu0pp_1 / f1.n);
    const cplx nu1p = b1.a2 * s1f.s1 - ih2 * (s1f.s1 * I1nu_1 + nu0pp_1 / f1.n);
    const cplx mu2p = b2.a1 * s1f.s1 + mu2Pp_1;
    const cplx nu2p = b2.a2 * s1f.s1 + nu2Pp_1;
    const cplx mutp = mu0p + mu1p / p.k + mu2p / k2;
    const cplx nutp = nu0p + nu1p / p.k + nu2p / k2;
    const cplx mut = sol.mu_tilde[M], nut = sol.nu_tilde[M];
    const cplx u1p = (mutp + ik * f1.n * mut) * E + (nutp - ik * f1.n * nut) / E + fs.F2p(1.0) / k2;
    const cplx u1 = mut * E + nut / E + fs.F2(1.0) / k2;
    sol.br_residual = u1p - ik * p.n_inf * u1;
  }

  sol.fine_xs = xf;
  sol.J_fine = J;
  sol.mu1_fine = std::move(mu1);
  sol.nu1_fine = std::move(nu1);
  return sol;
}

cplx assemble_u1(const HNASolution& sol, double x) {
  for (size_t m = 0; m < sol.xs.size(); ++m) {
    if (std::abs(sol.xs[m] - x) < 1e-15) {
      const cplx E = std::polar(1.0, sol.k * sol.Nx[m]);
      return sol.mu_tilde[m] * E + sol.nu_tilde[m] / E + sol.F2x[m] / (sol.k * sol.k);
    }
  }
  throw std::invalid_argument("assemble_u1: x is not a stored coarse node");
}

}  // namespace fccs
