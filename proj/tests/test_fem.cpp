#include "doctest.h"

#include <cmath>

#include "fccs/fem.hpp"

using namespace fccs;

namespace {

HelmholtzProblem wave_problem(double k) {
  HelmholtzProblem p;
  p.k = k;
  p.n = constant_field();
  p.F = zero_source();
  return p;
}

}  // namespace

TEST_CASE("constant medium plane wave") {
  const double k = 16.0;
  const FemResult r = fem_solve(wave_problem(k), 1 << 12);
  CHECK(std::abs(fem_value(r, 1.0) - std::exp(cplx(0.0, k))) <= 1e-3);
  CHECK(!r.pollution_warning);
}

TEST_CASE("second-order convergence") {
  const double k = 16.0;
  const cplx exact = std::exp(cplx(0.0, k * 0.5));
  double prev = -1.0;
  for (int n : {1 << 10, 1 << 11, 1 << 12}) {
    const double err = std::abs(fem_value(fem_solve(wave_problem(k), n), 0.5) - exact);
    if (prev > 0.0) {
      CHECK(prev / err >= 3.0);
      CHECK(prev / err <= 5.0);
    }
    prev = err;
  }
}

TEST_CASE("interior residual of the scheme") {
  // the second difference of the discrete solution approximates -k^2 u;
  // halving h halves nothing at fixed node but the defect drops by ~4
  HelmholtzProblem p = wave_problem(8.0);
  p.F = linear_source();
  auto defect = [&p](int n) {
    const FemResult r = fem_solve(p, n);
    double worst = 0.0;
    for (int i = 1; i + 1 < static_cast<int>(r.u.size()); ++i) {
      const cplx d2 = (r.u[i - 1] - 2.0 * r.u[i] + r.u[i + 1]) / (r.h * r.h);
      worst = std::max(worst,
                       std::abs(d2 + p.k * p.k * r.u[i] - cplx(p.F.value(r.x[i]))));
    }
    return worst;
  };
  CHECK(defect(2048) <= 0.6 * defect(1024));
}

TEST_CASE("pollution warning") {
  CHECK(fem_solve(wave_problem(128.0), 256).pollution_warning);  // k h = 0.5
  CHECK(!fem_solve(wave_problem(16.0), 4096).pollution_warning);
}

TEST_CASE("value lookup wants a node") {
  const FemResult r = fem_solve(wave_problem(4.0), 64);
  CHECK_NOTHROW(fem_value(r, 0.5));
  CHECK_THROWS(fem_value(r, 0.5 + 1e-3));
}
