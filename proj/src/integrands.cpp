#include "fccs/integrands.hpp"

#include <cmath>
#include <stdexcept>

namespace fccs {

namespace {

Integrand cospairs_integrand(int d, double m, double decay) {
  if (d % 2 != 0) throw std::invalid_argument("cospairs integrands need even d");
  return [d, m, decay](const std::vector<double>& y) -> cplx {
    double v = 1.0;
    double c = m;
    for (int i = 0; i + 1 < d; i += 2) {
      v *= std::cos(c * y[i] * y[i + 1]);
      c *= decay;
    }
    return v;
  };
}

}  // namespace

Integrand make_integrand(const std::string& name, const IntegrandParams& prm) {
  const int d = prm.d;
  if (d < 1) throw std::invalid_argument("make_integrand: d must be >= 1");
  if (name == "one") {
    return [](const std::vector<double>&) -> cplx { return 1.0; };
  }
  if (name == "prodsq") {
    return [](const std::vector<double>& y) -> cplx {
      double v = 1.0;
      for (double t : y) v *= t * t;
      return v;
    };
  }
  if (name == "cosprod") {
    const double m = prm.m;
    return [m](const std::vector<double>& y) -> cplx {
      double p = m;
      for (double t : y) p *= t;
      return std::cos(p);
    };
  }
  if (name == "cospairs") return cospairs_integrand(d, prm.m, 1.0);
  if (name == "cospairs-decay") return cospairs_integrand(d, prm.m, 0.1);
  if (name == "invsqrt-field") return invsqrt_field_integrand(d, prm.x);
  throw std::invalid_argument("unknown integrand: " + name);
}

bool known_integrand(const std::string& name) {
  return name == "one" || name == "prodsq" || name == "cosprod" || name == "cospairs" ||
         name == "cospairs-decay" || name == "invsqrt-field";
}

cplx prodsq_exact(double k, const std::vector<double>& a) {
  cplx v = 1.0;
  for (double aj : a) {
    const double w = k * aj;
    if (w == 0.0) {
      v *= 2.0 / 3.0;
    } else {
      // int_{-1}^{1} y^2 e^{iwy} dy (real by symmetry)
      v *= 2.0 * std::sin(w) / w + 4.0 * std::cos(w) / (w * w) -
           4.0 * std::sin(w) / (w * w * w);
    }
  }
  return v;
}

Integrand invsqrt_field_integrand(int d, double x) {
  const RefractiveModel model = builtin_model(d);
  return [model, x](const std::vector<double>& y) -> cplx {
    double n = model.n0.value(x);
    for (size_t j = 0; j < y.size(); ++j) n += model.modes[j].value(x) * y[j];
    if (n <= 0.0) throw std::domain_error("invsqrt-field: nonpositive refractive index");
    return 1.0 / std::sqrt(n);
  };
}

std::vector<double> field_phase(int d, double x) {
  return phase_vector(x, builtin_model(d));
}

std::function<cplx(double)> make_function1d(const std::string& name) {
  if (name == "one") return [](double) -> cplx { return 1.0; };
  if (name == "square") return [](double y) -> cplx { return y * y; };
  if (name == "expcos") return [](double y) -> cplx { return std::exp(std::cos(y)); };
  if (name == "cos2y") return [](double y) -> cplx { return std::cos(2.0 * y); };
  throw std::invalid_argument("unknown 1d function: " + name);
}

bool function1d_exact(const std::string& name, double omega, cplx* out) {
  if (name == "one") {
    *out = (omega == 0.0) ? cplx(2.0) : cplx(2.0 * std::sin(omega) / omega);
    return true;
  }
  if (name == "square") {
    *out = prodsq_exact(1.0, {omega});
    return true;
  }
  return false;
}

}  // namespace fccs
