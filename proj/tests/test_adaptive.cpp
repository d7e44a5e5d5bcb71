#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "fccs/adaptive.hpp"
#include "fccs/integrands.hpp"

using namespace fccs;

namespace {

bool downward_closed(std::vector<MultiIndex> set) {
  std::set<MultiIndex> all(set.begin(), set.end());
  for (const auto& idx : all) {
    for (size_t j = 0; j < idx.size(); ++j) {
      if (idx[j] == 1) continue;
      MultiIndex lower = idx;
      --lower[j];
      if (!all.count(lower)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("constant integrand stops after one refinement round") {
  auto one = [](const std::vector<double>&) -> cplx { return 1.0; };
  const int d = 4;
  const double k = 5.0;
  const std::vector<double> a(d, 1.0);
  AdaptiveOptions opt;
  opt.tol = 1e-12;
  const AdaptiveResult res = adaptive_integrate(one, k, a, opt);
  CHECK(res.evals == 1 + 2 * d);  // root grid plus one forward neighbour each way
  cplx exact = 1.0;
  for (double aj : a) exact *= 2.0 * std::sin(k * aj) / (k * aj);
  CHECK(std::abs(res.value - exact) <= 1e-13);
  CHECK(!res.budget_exhausted);
}

TEST_CASE("surplus decomposition telescopes to the level-r rule") {
  IntegrandParams prm;
  prm.d = 3;
  prm.m = 2.0;
  const Integrand f = make_integrand("cosprod", prm);
  const double k = 9.0;
  const std::vector<double> a = {1.0, 0.7, 0.4};
  for (int r : {2, 3, 4}) {
    AdaptiveOptions opt;
    opt.tol = 1e-16;
    opt.max_sum = r + prm.d - 1;
    opt.budget = 1000000;
    const AdaptiveResult res = adaptive_integrate(f, k, a, opt);
    const cplx direct = fccs_integrate(f, k, a, r).value;
    CHECK(std::abs(res.value - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("evaluation count grows monotonically as the tolerance shrinks") {
  const Integrand f = invsqrt_field_integrand(4, 0.5);
  const std::vector<double> a = field_phase(4, 0.5);
  long prev = 0;
  for (double tol : {1e-2, 1e-4, 1e-6, 1e-8}) {
    AdaptiveOptions opt;
    opt.tol = tol;
    const AdaptiveResult res = adaptive_integrate(f, 101.53, a, opt);
    CHECK(res.evals >= prev);
    prev = res.evals;
  }
}

TEST_CASE("anisotropy is exploited on the field integrand") {
  const Integrand f = invsqrt_field_integrand(6, 0.5);
  const std::vector<double> a = field_phase(6, 0.5);
  const double k = 101.53;
  const cplx ref = fccs_integrate(f, k, a, 11).value;

  AdaptiveOptions opt;
  opt.tol = 1e-6;
  const AdaptiveResult ad = adaptive_integrate(f, k, a, opt);
  const double ad_err = std::abs(ad.value - ref) / std::abs(ref);
  CHECK(ad_err <= 1e-5);

  // the cheapest isotropic rule achieving the same accuracy needs more points
  long iso_evals = 0;
  for (int r = 1; r <= 10; ++r) {
    const SparseResult sr = fccs_integrate(f, k, a, r);
    iso_evals = static_cast<long>(sr.nodes);
    if (std::abs(sr.value - ref) / std::abs(ref) <= ad_err) break;
  }
  CHECK(ad.evals < iso_evals);
}

TEST_CASE("budget exhaustion is reported, not thrown") {
  const Integrand f = invsqrt_field_integrand(4, 0.5);
  AdaptiveOptions opt;
  opt.tol = 1e-14;
  opt.budget = 40;
  const AdaptiveResult res = adaptive_integrate(f, 101.53, field_phase(4, 0.5), opt);
  CHECK(res.budget_exhausted);
  CHECK(res.evals <= 2 * opt.budget);  // may finish the round in flight
}

TEST_CASE("visited index set stays downward closed") {
  const Integrand f = invsqrt_field_integrand(3, 0.5);
  AdaptiveOptions opt;
  opt.tol = 1e-8;
  const AdaptiveResult res = adaptive_integrate(f, 25.92, field_phase(3, 0.5), opt);
  std::vector<MultiIndex> all = res.old_set;
  all.insert(all.end(), res.active_set.begin(), res.active_set.end());
  CHECK(downward_closed(all));
  CHECK(!res.old_set.empty());
  CHECK(res.max_profit <= opt.tol);
}
