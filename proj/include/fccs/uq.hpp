#pragma once

#include <string>

#include "fccs/adaptive.hpp"
#include "fccs/fem.hpp"
#include "fccs/helmholtz.hpp"
#include "fccs/sparse.hpp"

namespace fccs {

struct ModeFunctions {
  std::function<double(double)> value, d1, d2, d3, antideriv;
};

// n(x,y) = n0(x) + sum_j n_j(x) y_j, y uniform on [-1,1]^d.
struct RefractiveModel {
  int d = 0;
  ModeFunctions n0;
  std::vector<ModeFunctions> modes;
  std::string tag;
};

// Builtin family: n0 = 1, n_j(x) = scale * e^{-j} sin(j pi x).
RefractiveModel builtin_model(int d, double scale = 1.0);

// Custom affine family with sine modes amp_j * sin(freq_j pi x) over constant n0.
RefractiveModel sine_model(double n0, const std::vector<double>& amps,
                           const std::vector<int>& freqs);

// min_x n0(x) - sum_j max_x |n_j(x)| by dense sampling; throws if <= 0.
double positivity_margin(const RefractiveModel& model, int samples = 2000);

// a_j(x) = N_j(x) = int_0^x n_j.
std::vector<double> phase_vector(double x, const RefractiveModel& model);

// Realization n(x, y) as a FieldSample (callable-backed).
FieldSample sample_field(const RefractiveModel& model, const std::vector<double>& y);

struct UQMethod {
  enum class Kind { Standard, Adaptive };
  Kind kind = Kind::Standard;
  int r = 10;            // standard: sparse level
  double tau = 1e-4;     // adaptive: profit tolerance (nu-part relaxed to k*tau)
  long budget = 1000000;
  Level1Variant variant = Level1Variant::Midpoint;
};

struct UQResult {
  cplx value = 0.0;                            // E[u1(x)]
  cplx part_mu = 0.0, part_nu = 0.0, part_f = 0.0;  // 2^{-d}-normalized integrals
  long n_mu = 0, n_nu = 0, n_f = 0;            // nodes per integral
  long n_solves = 0;                           // distinct HNA solves
  bool budget_exhausted = false;
};

UQResult expectation_u1(double x, double k, const RefractiveModel& model, const SourceTerm& F,
                        cplx u_L, double n_inf, const UQMethod& method,
                        const SpatialMesh& mesh = {});

// Brute-force E[u(x)] by tensor Gauss-Legendre over y with one FEM solve per
// node; refuses when gauss_pts^d exceeds the cap.
cplx reference_expectation(double x, double k, const RefractiveModel& model,
                           const SourceTerm& F, cplx u_L, double n_inf, int gauss_pts,
                           int fem_elements, long cap = 1000000);

}  // namespace fccs
