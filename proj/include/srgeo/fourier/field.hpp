#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace srgeo {

/// Real 2*pi-periodic function stored as its Fourier coefficients
/// c_k, |k| <= N. Only c_0..c_N are kept; c_{-k} = conj(c_k) is implied, so
/// the represented function is always real and c_0 is kept real.
///
///   x(theta) = sum_{|k|<=N} c_k e^{ik theta}
///
/// With this normalization cos(n theta) has c_n = 1/2 and sin(n theta) has
/// c_n = -i/2.
class FourierField {
 public:
  using Complex = std::complex<double>;

  FourierField() = default;
  explicit FourierField(int bandLimit);
  /// `nonNegative` holds c_0..c_N (length N+1).
  FourierField(int bandLimit, std::vector<Complex> nonNegative);

  static FourierField constant(int bandLimit, double value);
  /// amplitude * cos(n theta)
  static FourierField cosine(int bandLimit, int n, double amplitude = 1.0);
  /// amplitude * sin(n theta)
  static FourierField sine(int bandLimit, int n, double amplitude = 1.0);
  /// Interpolates samples on a uniform grid of M >= 2N nodes and truncates to N.
  static FourierField fromSamples(std::span<const double> values, int bandLimit);
  /// Samples f on M nodes (default 4N, at least 16) and truncates to N.
  static FourierField fromFunction(int bandLimit, const std::function<double(double)>& f,
                                   int gridSize = 0);

  int bandLimit() const { return band_; }
  /// c_k for any integer k; zero outside the band.
  Complex coeff(int k) const;
  /// Sets c_k (and thereby c_{-k}); k = 0 keeps only the real part.
  void setCoeff(int k, Complex value);
  std::span<const Complex> coeffs() const { return coeffs_; }

  /// Values at theta_j = 2*pi*j/M. Requires M >= 2N.
  std::vector<double> samples(int gridSize) const;
  double operator()(double theta) const;
  /// Values (and optionally derivatives) at arbitrary points.
  void evaluate(std::span<const double> theta, std::span<double> value,
                std::span<double> deriv = {}) const;

  /// order-th theta-derivative (spectrally exact).
  FourierField derivative(int order = 1) const;
  /// Same function at band limit `bandLimit` (zero-padded or truncated).
  FourierField resized(int bandLimit) const;
  /// Copy with c_0 set to zero.
  FourierField withoutMean() const;

  /// sqrt(sum_{|k|<=N} |c_k|^2) = L2 norm w.r.t. d theta / 2 pi.
  double norm() const;
  /// max_k |c_k|
  double maxCoeff() const;
  bool isFinite() const;

  FourierField& operator+=(const FourierField& o);
  FourierField& operator-=(const FourierField& o);
  FourierField& operator*=(double s);

 private:
  int band_ = 0;
  std::vector<Complex> coeffs_{Complex(0.0)};
};

FourierField operator+(FourierField a, const FourierField& b);
FourierField operator-(FourierField a, const FourierField& b);
FourierField operator-(FourierField a);
FourierField operator*(double s, FourierField a);
FourierField operator*(FourierField a, double s);

/// Largest coefficient difference, max_k |a_k - b_k|.
double maxCoeffDistance(const FourierField& a, const FourierField& b);

/// Dealiased product a*b truncated to the common band N, computed on a 4N-node
/// grid so that all retained modes are exact.
FourierField multiply(const FourierField& a, const FourierField& b);

struct ProductTerm {
  const FourierField& left;
  const FourierField& right;
  double weight = 1.0;
};

/// sum_i weight_i * left_i * right_i with one forward transform (dealiased,
/// truncated to the common band limit).
FourierField sumOfProducts(std::initializer_list<ProductTerm> terms);

}  // namespace srgeo
