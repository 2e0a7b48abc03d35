#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "srgeo/fourier/field.hpp"
#include "srgeo/fourier/params.hpp"

namespace srgeo {

enum class InnerProductKind { h10, hab, kahler };

/// One of the three circle metrics, all extended to constants by
/// <x,y> = <x - mean x, y - mean y>_0 + mean(x) mean(y):
///
///   h10:     sum_k x_k conj(y_k)                    ((1/2pi) int x y)
///   hab:     sum_{k!=0} (alpha + beta k^2) x_k conj(y_k) + means
///   kahler:  sum_{k!=0} |k| (alpha + beta k^2) x_k conj(y_k) + means
class InnerProduct {
 public:
  static InnerProduct h10() { return InnerProduct(InnerProductKind::h10, std::nullopt); }
  static InnerProduct hab(const MetricParams& p) { return InnerProduct(InnerProductKind::hab, p); }
  static InnerProduct kahler(const MetricParams& p) {
    return InnerProduct(InnerProductKind::kahler, p);
  }

  InnerProductKind kind() const { return kind_; }
  const std::optional<MetricParams>& params() const { return params_; }
  /// Weight multiplying x_k conj(y_k) for k != 0.
  double weight(int k) const;

  double operator()(const FourierField& x, const FourierField& y) const;

 private:
  InnerProduct(InnerProductKind kind, std::optional<MetricParams> params)
      : kind_(kind), params_(params) {}

  InnerProductKind kind_;
  std::optional<MetricParams> params_;
};

double innerProduct(const InnerProduct& metric, const FourierField& x, const FourierField& y);

/// Hermitian area form 2 sum_{n>=1} (alpha n + beta n^3) a_n conj(b_n) on
/// coefficient sequences indexed by n (entry 0 is ignored). The real part is
/// the Kahler product; the imaginary part is the cocycle with (mu,nu) =
/// (alpha, beta).
std::complex<double> kahlerCoefficientMetric(const MetricParams& params,
                                             std::span<const std::complex<double>> a,
                                             std::span<const std::complex<double>> b);

/// Taylor coefficients of F(e^{i theta}) = -(i/2)(x - i J x) for a field x:
/// a_n = -i x_n for n >= 1, a_0 = 0 (the mean is dropped).
std::vector<std::complex<double>> fieldToTangent(const FourierField& x);

}  // namespace srgeo
