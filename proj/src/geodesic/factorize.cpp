#include "srgeo/geodesic/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "srgeo/core/error.hpp"
#include "srgeo/core/timegrid.hpp"
#include "srgeo/group/diffeo.hpp"

namespace srgeo {
namespace {

std::vector<double> flatten(const FourierField& f) {
  std::vector<double> v;
  v.reserve(2 * f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    v.push_back(c.real());
    v.push_back(c.imag());
  }
  return v;
}

}  // namespace

double geodesicResidual(const Model& model, const std::vector<FourierField>& u, double lambda1,
                        double lambda2, double dt) {
  std::vector<std::vector<double>> series;
  series.reserve(u.size());
  for (const auto& f : u) series.push_back(flatten(f));
  double worst = 0.0, scale = 1.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::vector<double> ut = timeDerivativeAt(series, static_cast<int>(i), dt);
    // geodesicRHS drops mode 0, whose exact rate is zero for these models
    const std::vector<double> f = flatten(geodesicRHS(model, {u[i], lambda1, lambda2}));
    for (std::size_t j = 0; j < f.size(); ++j) {
      worst = std::max(worst, std::abs(ut[j] - f[j]));
      scale = std::max(scale, std::abs(f[j]));
    }
  }
  return worst / scale;
}

Factorization factorizeSR(const std::vector<FourierField>& uR, double dt, double tolerance) {
  if (uR.empty()) throw InputError("factorizeSR: empty trajectory");
  Factorization out;
  out.riemannResidual = geodesicResidual(Model::h10(), uR, 0.0, 0.0, dt);
  if (!(out.riemannResidual <= tolerance)) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "factorizeSR: input is not a Riemannian geodesic (residual %.3g > %.3g)",
                  out.riemannResidual, tolerance);
    throw InputError(buf);
  }
  out.lambda = mean(uR.front());
  out.uSR.reserve(uR.size());
  for (std::size_t i = 0; i < uR.size(); ++i) {
    FourierField w = uR[i];
    w.setCoeff(0, w.coeff(0) - out.lambda);
    out.uSR.push_back(rotate(w, out.lambda * dt * static_cast<double>(i)));
  }
  return out;
}

}  // namespace srgeo
