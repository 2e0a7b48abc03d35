#include "srgeo/fourier/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "srgeo/core/error.hpp"

namespace srgeo {

MetricParams::MetricParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw ParameterError("metric parameters must be finite");
  }
  if (beta < 0.0) throw ParameterError("metric parameter beta must be >= 0");
  if (!(alpha > -beta)) throw ParameterError("metric parameters need alpha > -beta");
}

void MetricParams::validateFor(int bandLimit) const {
  for (int n = 1; n <= bandLimit; ++n) {
    if (symbol(n) == 0.0) {
      throw ParameterError("alpha = -n^2 beta for n = " + std::to_string(n));
    }
  }
}

double InnerProduct::weight(int k) const {
  switch (kind_) {
    case InnerProductKind::h10: return 1.0;
    case InnerProductKind::hab: return params_->symbol(k);
    case InnerProductKind::kahler: return std::abs(k) * params_->symbol(k);
  }
  return 0.0;
}

double InnerProduct::operator()(const FourierField& x, const FourierField& y) const {
  if (x.bandLimit() != y.bandLimit()) throw DimensionError("innerProduct: band limits differ");
  if (params_) params_->validateFor(x.bandLimit());
  double s = 0.0;
  for (int k = 1; k <= x.bandLimit(); ++k) {
    s += weight(k) * (x.coeff(k) * std::conj(y.coeff(k))).real();
  }
  return 2.0 * s + x.coeff(0).real() * y.coeff(0).real();
}

double innerProduct(const InnerProduct& metric, const FourierField& x, const FourierField& y) {
  return metric(x, y);
}

std::complex<double> kahlerCoefficientMetric(const MetricParams& params,
                                             std::span<const std::complex<double>> a,
                                             std::span<const std::complex<double>> b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::complex<double> s(0.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    s += (params.alpha() * kd + params.beta() * kd * kd * kd) * a[k] * std::conj(b[k]);
  }
  return 2.0 * s;
}

std::vector<std::complex<double>> fieldToTangent(const FourierField& x) {
  std::vector<std::complex<double>> a(static_cast<std::size_t>(x.bandLimit()) + 1);
  for (int k = 1; k <= x.bandLimit(); ++k) {
    a[static_cast<std::size_t>(k)] = std::complex<double>(0.0, -1.0) * x.coeff(k);
  }
  return a;
}

}  // namespace srgeo
