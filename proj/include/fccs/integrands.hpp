#pragma once

#include <string>

#include "fccs/sparse.hpp"
#include "fccs/uq.hpp"

namespace fccs {

// Builtin d-dimensional integrand registry shared by the CLI and the table
// scripts.  Names: one, prodsq (prod y_j^2), cosprod (cos(m y_1...y_d)),
// cospairs (prod_i cos(m y_{2i-1} y_{2i})), cospairs-decay (pair weights
// 1, 0.1, 0.01, ...), invsqrt-field (n^{-1/2}(x, y) of the builtin
// refractive family).
struct IntegrandParams {
  int d = 1;
  double m = 2.0;  // modulation parameter of the cosine families
  double x = 0.5;  // spatial point of the field integrand
};

Integrand make_integrand(const std::string& name, const IntegrandParams& prm);
bool known_integrand(const std::string& name);

// Closed form of int_{[-1,1]^d} prod_j y_j^2 e^{i k a.y} dy.
cplx prodsq_exact(double k, const std::vector<double>& a);

// Field integrand n^{-1/2}(x, .) of the builtin refractive family, and its
// phase vector a(x) (the mode antiderivatives N_j(x)).
Integrand invsqrt_field_integrand(int d, double x);
std::vector<double> field_phase(int d, double x);

// 1D real-valued functions for the quad1d subcommand: one, square, expcos,
// cos2y.  function1d_exact yields the closed form of int g e^{i omega y} dy
// when one exists.
std::function<cplx(double)> make_function1d(const std::string& name);
bool function1d_exact(const std::string& name, double omega, cplx* out);

}  // namespace fccs
