#include "fccs/cheb.hpp"

#include <cmath>
#include <stdexcept>

namespace fccs {

int level_degree(int level) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  if (level == 1) return 1;
  if (level > 40) throw std::invalid_argument("level too large");
  return 1 << (level - 1);
}

double node_coord(long long j, long long denom) {
  if (denom <= 0 || j < 0 || j > denom) throw std::invalid_argument("bad node fraction");
  while ((j & 1) == 0 && (denom & 1) == 0 && denom > 1) {
    j >>= 1;
    denom >>= 1;
  }
  if (j == 0) return 1.0;
  if (j == denom) return -1.0;
  if (2 * j == denom) return 0.0;
  if (2 * j > denom) return -node_coord(denom - j, denom);  // exact antisymmetry
  return std::cos(static_cast<double>(j) * M_PI / static_cast<double>(denom));
}

ChebLevel cc_nodes(int level, Level1Variant variant) {
  ChebLevel out;
  out.level = level;
  out.degree = level_degree(level);
  if (level == 1) {
    if (variant == Level1Variant::Midpoint)
      out.nodes = {0.0};
    else
      out.nodes = {1.0, -1.0};
    return out;
  }
  const int n = out.degree;
  out.nodes.resize(n + 1);
  for (int j = 0; j <= n; ++j) out.nodes[j] = node_coord(j, n);
  return out;
}

namespace {

// In-place radix-2 FFT, size a power of two.  sign = -1: forward transform.
void fft_pow2(std::vector<cplx>& v, int sign) {
  const size_t n = v.size();
  for (size_t i = 1, k = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; k & bit; bit >>= 1) k ^= bit;
    k ^= bit;
    if (i < k) std::swap(v[i], v[k]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (size_t m = 0; m < len / 2; ++m) {
        cplx u = v[i + m];
        cplx t = w * v[i + m + len / 2];
        v[i + m] = u + t;
        v[i + m + len / 2] = u - t;
        w *= wl;
      }
    }
  }
}

std::vector<cplx> dct_direct(const std::vector<cplx>& u) {
  const int n = static_cast<int>(u.size()) - 1;
  std::vector<cplx> out(n + 1);
  for (int j = 0; j <= n; ++j) {
    cplx acc = 0.5 * (u[0] + (j % 2 == 0 ? u[n] : -u[n]));
    for (int m = 1; m < n; ++m)
      acc += u[m] * std::cos(static_cast<double>(j) * m * M_PI / n);
    out[j] = 2.0 / static_cast<double>(n) * acc;
  }
  return out;
}

}  // namespace

std::vector<cplx> dct_apply(const std::vector<cplx>& u) {
  const int n = static_cast<int>(u.size()) - 1;
  if (n < 1 || (n & (n - 1)) != 0) throw std::invalid_argument("dct size must be 2^m + 1");
  if (n <= 8) return dct_direct(u);
  // Even extension v_m = u_m, v_{2n-m} = u_m; then FFT_k(v) = 2 sum''_m u_m cos(k m pi/n).
  std::vector<cplx> v(2 * n);
  v[0] = u[0];
  v[n] = u[n];
  for (int m = 1; m < n; ++m) {
    v[m] = u[m];
    v[2 * n - m] = u[m];
  }
  fft_pow2(v, -1);
  std::vector<cplx> out(n + 1);
  for (int j = 0; j <= n; ++j) out[j] = v[j] / static_cast<double>(n);
  return out;
}

ChebSeries dct_coeffs(const std::vector<cplx>& values, int level) {
  const int n = level_degree(level);
  const size_t want = (level == 1) ? 1 : static_cast<size_t>(n) + 1;
  if (values.size() != want) throw std::invalid_argument("dct_coeffs: value count does not match level");
  ChebSeries s;
  s.level = level;
  if (level == 1) {
    s.coeffs = {values[0]};
    return s;
  }
  s.coeffs = dct_apply(values);
  return s;
}

cplx eval_series(const ChebSeries& s, double y) {
  if (std::abs(y) > 1.0 + 1e-14) throw std::domain_error("eval_series: |y| > 1");
  const auto& a = s.coeffs;
  const int n = static_cast<int>(a.size()) - 1;
  if (n == 0) return a[0];  // level-1 constant interpolant
  // Clenshaw on b_m = h_m a_m (ends halved).
  cplx d1 = 0.0, d2 = 0.0;
  const double y2 = 2.0 * y;
  for (int m = n; m >= 1; --m) {
    cplx bm = (m == n) ? 0.5 * a[m] : a[m];
    cplx d0 = y2 * d1 - d2 + bm;
    d2 = d1;
    d1 = d0;
  }
  return y * d1 - d2 + 0.5 * a[0];
}

}  // namespace fccs
