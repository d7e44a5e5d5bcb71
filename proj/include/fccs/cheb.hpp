#pragma once

#include <complex>
#include <vector>

namespace fccs {

using cplx = std::complex<double>;

// Level-1 grid flavor: single midpoint {0} (default) or endpoints {-1,1}.
enum class Level1Variant { Midpoint, TwoPoint };

// Degree n_l of the level-l grid: n_1 = 1, n_l = 2^(l-1) for l >= 2.
int level_degree(int level);

struct ChebLevel {
  int level = 0;
  int degree = 0;                 // n_l
  std::vector<double> nodes;      // descending, cos(j*pi/n_l) for l >= 2
};

ChebLevel cc_nodes(int level, Level1Variant variant = Level1Variant::Midpoint);

// Coordinate of the dyadic node j/denom (angle j*pi/denom).  The fraction is
// reduced first so that the same node reached from different levels yields a
// bit-identical double; the axis points 1, 0, -1 come out exact.
double node_coord(long long j, long long denom);

struct ChebSeries {
  int level = 0;
  std::vector<cplx> coeffs;  // raw a_0..a_n; sum'' halving applied by consumers
};

// a_n = (2/n) sum''_j cos(j n pi / n) g(t_j); for level 1 returns {g(0)}.
ChebSeries dct_coeffs(const std::vector<cplx>& values, int level);

// The shared cosine-transform kernel: out_j = (2/n) sum''_m u_m cos(j m pi / n)
// with n = u.size()-1 a power of two.  Uses an even-symmetric FFT of length 2n
// (direct summation for small n).
std::vector<cplx> dct_apply(const std::vector<cplx>& u);

// sum'' a_n T_n(y) by a backward Clenshaw recurrence.
cplx eval_series(const ChebSeries& s, double y);

}  // namespace fccs
