#pragma once

#include <functional>

#include "fccs/cheb.hpp"

namespace fccs {

// Refractive index realization n(x) on [0,1] with analytic derivatives up to
// n''' and the antiderivative N(x) = int_0^x n (needed exactly for the phase).
struct FieldDerivs {
  double n = 1.0, d1 = 0.0, d2 = 0.0, d3 = 0.0;
};

struct FieldSample {
  std::function<FieldDerivs(double)> derivs;
  std::function<double(double)> antideriv;
};

struct SourceTerm {
  std::function<double(double)> value;
  std::function<double(double)> d1;
};

FieldSample constant_field(double n0 = 1.0);
SourceTerm zero_source();
SourceTerm linear_source();  // F(x) = x

// u'' + k^2 n^2 u = F on (0,1), u(0) = u_L, u'(1) - i k n_inf u(1) = 0.
struct HelmholtzProblem {
  double k = 1.0;
  cplx u_L = 1.0;
  double n_inf = 1.0;
  FieldSample n;
  SourceTerm F;
};

struct SpatialMesh {
  int M = 1;      // coarse intervals
  int L = 1024;   // fine subintervals per coarse interval (even)
  int MG = 10;    // Gauss points per fine subinterval
};

// F2 = F/n^2 and its boundary data.
struct FSeq {
  std::function<double(double)> F2;
  std::function<double(double)> F2p;
  double F2_at_0 = 0.0;
  cplx BR_F2 = 0.0;  // F2'(1) - i k n_inf F2(1)
};

FSeq f_sequence(const HelmholtzProblem& p);

// Checks n > 0 and finite-difference consistency of the derivative callables.
void check_field(const HelmholtzProblem& p, int samples = 10, double fd_tol = 1e-6);

struct HNASolution {
  double k = 0.0;
  double n_inf = 1.0;
  std::vector<double> xs;   // coarse nodes x_m
  std::vector<double> Nx;   // N(x_m)
  std::vector<double> F2x;  // F2(x_m)
  std::vector<cplx> mu0, mu1, mu2, nu0, nu1, nu2;  // parts at coarse nodes
  std::vector<cplx> mu_tilde, nu_tilde;            // mu0 + mu1/k + mu2/k^2
  cplx alpha[3][2];                                // alpha_j^1, alpha_j^2
  double cond[3] = {0, 0, 0};                      // 2x2 BC system conditioning
  cplx bl_residual = 0.0, br_residual = 0.0;
  // fine-grid diagnostics
  std::vector<double> fine_xs;
  std::vector<double> J_fine;  // int_0^x (n^{-1/2})'' n^{-1/2}
  std::vector<cplx> mu1_fine, nu1_fine;
};

HNASolution solve_hna(const HelmholtzProblem& p, const SpatialMesh& mesh = {});

// u1(x) = mu_tilde e^{ikN} + nu_tilde e^{-ikN} + k^{-2} F2 at a stored node.
cplx assemble_u1(const HNASolution& sol, double x);

}  // namespace fccs
