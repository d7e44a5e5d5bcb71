#include "doctest.h"

#include <cmath>
#include <random>

#include "fccs/cheb.hpp"

using namespace fccs;

namespace {
double cheb_t(int n, double y) { return std::cos(n * std::acos(std::min(1.0, std::max(-1.0, y)))); }
}  // namespace

TEST_CASE("grid degrees") {
  CHECK(level_degree(1) == 1);
  CHECK(level_degree(2) == 2);
  CHECK(level_degree(5) == 16);
  CHECK_THROWS(level_degree(0));
}

TEST_CASE("level nodes") {
  CHECK(cc_nodes(1).nodes == std::vector<double>{0.0});
  CHECK(cc_nodes(1, Level1Variant::TwoPoint).nodes == std::vector<double>{1.0, -1.0});
  CHECK(cc_nodes(2).nodes == std::vector<double>{1.0, 0.0, -1.0});
  const auto l3 = cc_nodes(3).nodes;
  REQUIRE(l3.size() == 5);
  CHECK(l3[0] == 1.0);
  CHECK(l3[1] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
  CHECK(l3[2] == 0.0);
  CHECK(l3[3] == -l3[1]);
  CHECK(l3[4] == -1.0);
  CHECK_THROWS(cc_nodes(0));
}

TEST_CASE("nesting is bit exact") {
  for (int l = 2; l <= 6; ++l) {
    const auto coarse = cc_nodes(l).nodes;
    const auto fine = cc_nodes(l + 1).nodes;
    for (size_t j = 0; j < coarse.size(); ++j) CHECK(coarse[j] == fine[2 * j]);
  }
}

TEST_CASE("dct examples") {
  {
    const ChebSeries s = dct_coeffs({1.0, 0.0, -1.0}, 2);  // T_1 sampled at level 2
    CHECK(std::abs(s.coeffs[0]) < 1e-15);
    CHECK(std::abs(s.coeffs[1] - 1.0) < 1e-15);
    CHECK(std::abs(s.coeffs[2]) < 1e-15);
  }
  {
    const ChebSeries s = dct_coeffs({1.0, 1.0, 1.0}, 2);  // constant
    CHECK(std::abs(s.coeffs[0] - 2.0) < 1e-15);
    CHECK(std::abs(s.coeffs[1]) < 1e-15);
    CHECK(std::abs(s.coeffs[2]) < 1e-15);
  }
  {
    // T_4 at the level-3 nodes cos(j pi/4) is cos(j pi) = (-1)^j; the top
    // coefficient is stored doubled (primed-sum convention)
    const ChebSeries s = dct_coeffs({1.0, -1.0, 1.0, -1.0, 1.0}, 3);
    for (int n = 0; n < 4; ++n) CHECK(std::abs(s.coeffs[n]) < 1e-14);
    CHECK(std::abs(s.coeffs[4] - 2.0) < 1e-14);
  }
  CHECK_THROWS(dct_coeffs({1.0, 2.0}, 2));  // length mismatch
}

TEST_CASE("eval examples") {
  const ChebSeries t1 = dct_coeffs({1.0, 0.0, -1.0}, 2);
  CHECK(std::abs(eval_series(t1, 0.3) - 0.3) < 1e-15);
  const ChebSeries c = dct_coeffs({1.0, 1.0, 1.0}, 2);
  CHECK(std::abs(eval_series(c, -0.77) - 1.0) < 1e-15);
  std::vector<cplx> vals;
  for (double t : cc_nodes(5).nodes) vals.push_back(std::cos(2.0 * t));
  const ChebSeries s = dct_coeffs(vals, 5);
  CHECK(std::abs(eval_series(s, 0.5) - std::cos(1.0)) < 1e-10);
  CHECK_THROWS(eval_series(s, 1.5));
}

TEST_CASE("interpolation property at all nodes") {
  auto g = [](double y) { return std::exp(y) * std::cos(3.0 * y); };
  for (int l = 1; l <= 6; ++l) {
    const auto nodes = cc_nodes(l).nodes;
    std::vector<cplx> vals;
    for (double t : nodes) vals.push_back(g(t));
    const ChebSeries s = dct_coeffs(vals, l);
    for (size_t j = 0; j < nodes.size(); ++j)
      CHECK(std::abs(eval_series(s, nodes[j]) - g(nodes[j])) <=
            1e-13 * std::max(1.0, std::abs(g(nodes[j]))));
  }
}

TEST_CASE("polynomial exactness of the transform") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int l = 2; l <= 6; ++l) {
    const int n = level_degree(l);
    std::vector<cplx> ref(n + 1);
    for (auto& c : ref) c = cplx(unif(rng), unif(rng));
    // synthesize values of the sum'' series, then recover the coefficients
    const auto nodes = cc_nodes(l).nodes;
    std::vector<cplx> vals(nodes.size(), 0.0);
    for (size_t j = 0; j < nodes.size(); ++j)
      for (int m = 0; m <= n; ++m) {
        const double halve = (m == 0 || m == n) ? 0.5 : 1.0;
        vals[j] += halve * ref[m] * cheb_t(m, nodes[j]);
      }
    const ChebSeries s = dct_coeffs(vals, l);
    for (int m = 0; m <= n; ++m) CHECK(std::abs(s.coeffs[m] - ref[m]) < 1e-13);
  }
}
