#include "srgeo/fourier/algebra.hpp"

#include <cmath>

#include "srgeo/core/error.hpp"

namespace srgeo {

FourierField bracket(const FourierField& x, const FourierField& y) {
  const FourierField dx = x.derivative();
  const FourierField dy = y.derivative();
  return sumOfProducts({{dx, y, 1.0}, {dy, x, -1.0}});
}

double mean(const FourierField& x) { return x.coeff(0).real(); }

FourierField hilbert(const FourierField& x) {
  FourierField r(x.bandLimit());
  for (int k = 1; k <= x.bandLimit(); ++k) {
    r.setCoeff(k, FourierField::Complex(0.0, 1.0) * x.coeff(k));
  }
  return r;
}

FourierField applyL(const MetricParams& params, const FourierField& x) {
  FourierField r(x.bandLimit());
  for (int k = 0; k <= x.bandLimit(); ++k) r.setCoeff(k, -params.symbol(k) * x.coeff(k));
  return r;
}

FourierField applyCocycleOperator(const CocycleParams& params, const FourierField& x) {
  FourierField r(x.bandLimit());
  for (int k = 0; k <= x.bandLimit(); ++k) {
    const double kk = static_cast<double>(k) * k;
    r.setCoeff(k, -(params.mu + params.nu * kk) * x.coeff(k));
  }
  return r;
}

double cocycleOmega(const CocycleParams& params, const FourierField& x, const FourierField& y) {
  if (x.bandLimit() != y.bandLimit()) throw DimensionError("cocycleOmega: band limits differ");
  double s = 0.0;
  for (int k = 1; k <= x.bandLimit(); ++k) {
    const double kd = k;
    s += (params.mu * kd + params.nu * kd * kd * kd) * (x.coeff(k) * std::conj(y.coeff(k))).imag();
  }
  return 2.0 * s;
}

FourierField adjointAdT(const FourierField& x, const FourierField& y) {
  const FourierField dx = x.derivative();
  const FourierField dy = y.derivative();
  return sumOfProducts({{x, dy, 1.0}, {dx, y, 2.0}});
}

VirasoroVector bracket(const CocycleParams& params, const VirasoroVector& x,
                       const VirasoroVector& y) {
  return {bracket(x.field, y.field), cocycleOmega(params, x.field, y.field)};
}

VirasoroVector adjointAdT(const CocycleParams& params, const VirasoroVector& x,
                          const VirasoroVector& y) {
  FourierField f = adjointAdT(x.field, y.field);
  f += y.central * applyCocycleOperator(params, x.field.derivative());
  return {std::move(f), 0.0};
}

VirasoroVector operator+(const VirasoroVector& a, const VirasoroVector& b) {
  return {a.field + b.field, a.central + b.central};
}

VirasoroVector operator-(const VirasoroVector& a, const VirasoroVector& b) {
  return {a.field - b.field, a.central - b.central};
}

VirasoroVector operator*(double s, const VirasoroVector& a) {
  return {s * a.field, s * a.central};
}

}  // namespace srgeo
