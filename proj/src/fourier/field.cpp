#include "srgeo/fourier/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "srgeo/core/error.hpp"
#include "srgeo/fourier/transform.hpp"
#include "srgeo/simd/kernels.hpp"

namespace srgeo {
namespace {

void requireBand(int n) {
  if (n < 0) throw DimensionError("band limit must be non-negative");
}

void requireSameBand(const FourierField& a, const FourierField& b, const char* what) {
  if (a.bandLimit() != b.bandLimit()) {
    throw DimensionError(std::string(what) + ": band limits differ (" +
                         std::to_string(a.bandLimit()) + " vs " +
                         std::to_string(b.bandLimit()) + ")");
  }
}

int productGrid(int band) { return std::max(4 * band, 4); }

}  // namespace

FourierField::FourierField(int bandLimit) {
  requireBand(bandLimit);
  band_ = bandLimit;
  coeffs_.assign(static_cast<std::size_t>(bandLimit) + 1, Complex(0.0));
}

FourierField::FourierField(int bandLimit, std::vector<Complex> nonNegative) {
  requireBand(bandLimit);
  if (nonNegative.size() != static_cast<std::size_t>(bandLimit) + 1) {
    throw DimensionError("FourierField: expected N+1 coefficients");
  }
  band_ = bandLimit;
  coeffs_ = std::move(nonNegative);
  coeffs_[0].imag(0.0);
}

FourierField FourierField::constant(int bandLimit, double value) {
  FourierField f(bandLimit);
  f.coeffs_[0] = value;
  return f;
}

FourierField FourierField::cosine(int bandLimit, int n, double amplitude) {
  FourierField f(bandLimit);
  if (n == 0) return constant(bandLimit, amplitude);
  if (n < 0 || n > bandLimit) throw DimensionError("harmonic outside band");
  f.coeffs_[static_cast<std::size_t>(n)] = Complex(amplitude / 2.0, 0.0);
  return f;
}

FourierField FourierField::sine(int bandLimit, int n, double amplitude) {
  FourierField f(bandLimit);
  if (n == 0) return f;
  if (n < 0 || n > bandLimit) throw DimensionError("harmonic outside band");
  f.coeffs_[static_cast<std::size_t>(n)] = Complex(0.0, -amplitude / 2.0);
  return f;
}

FourierField FourierField::fromSamples(std::span<const double> values, int bandLimit) {
  const int m = static_cast<int>(values.size());
  if (m < 2 * bandLimit || m < 1) {
    throw DimensionError("fromSamples: need at least 2N grid nodes");
  }
  std::vector<Complex> half(static_cast<std::size_t>(m / 2 + 1));
  forwardReal(values, half);
  FourierField f(bandLimit);
  for (int k = 0; k <= bandLimit; ++k) f.coeffs_[static_cast<std::size_t>(k)] = half[k];
  // the Nyquist mode of an even grid is shared between +N and -N
  if (m % 2 == 0 && bandLimit == m / 2 && bandLimit > 0) f.coeffs_.back() *= 0.5;
  f.coeffs_[0].imag(0.0);
  return f;
}

FourierField FourierField::fromFunction(int bandLimit, const std::function<double(double)>& f,
                                        int gridSize) {
  const int m = gridSize > 0 ? gridSize : std::max(4 * bandLimit, 16);
  std::vector<double> v(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) v[j] = f(2.0 * std::numbers::pi * j / m);
  return fromSamples(v, bandLimit);
}

FourierField::Complex FourierField::coeff(int k) const {
  const int a = std::abs(k);
  if (a > band_) return Complex(0.0);
  const Complex c = coeffs_[static_cast<std::size_t>(a)];
  return k >= 0 ? c : std::conj(c);
}

void FourierField::setCoeff(int k, Complex value) {
  const int a = std::abs(k);
  if (a > band_) throw DimensionError("setCoeff: mode outside band");
  if (k == 0) value.imag(0.0);
  coeffs_[static_cast<std::size_t>(a)] = k >= 0 ? value : std::conj(value);
}

std::vector<double> FourierField::samples(int gridSize) const {
  if (gridSize < 2 * band_ || gridSize < 1) {
    throw DimensionError("samples: need at least 2N grid nodes");
  }
  std::vector<Complex> half(static_cast<std::size_t>(gridSize / 2 + 1), Complex(0.0));
  for (int k = 0; k <= band_; ++k) half[k] = coeffs_[static_cast<std::size_t>(k)];
  if (gridSize % 2 == 0 && band_ == gridSize / 2 && band_ > 0) {
    half.back() = Complex(2.0 * coeffs_.back().real(), 0.0);
  }
  std::vector<double> out(static_cast<std::size_t>(gridSize));
  inverseReal(half, out);
  return out;
}

double FourierField::operator()(double theta) const {
  double v = 0.0;
  simd::kernels().trig_eval(coeffs_.data(), coeffs_.size(), &theta, &v, nullptr, 1);
  return v;
}

void FourierField::evaluate(std::span<const double> theta, std::span<double> value,
                            std::span<double> deriv) const {
  simd::trigEval(coeffs_, theta, value, deriv);
}

FourierField FourierField::derivative(int order) const {
  if (order < 0) throw DimensionError("derivative order must be non-negative");
  FourierField d(*this);
  for (int k = 0; k <= band_; ++k) {
    Complex factor(1.0);
    for (int o = 0; o < order; ++o) factor *= Complex(0.0, static_cast<double>(k));
    d.coeffs_[static_cast<std::size_t>(k)] *= factor;
  }
  d.coeffs_[0] = order == 0 ? coeffs_[0] : Complex(0.0);
  return d;
}

FourierField FourierField::resized(int bandLimit) const {
  FourierField r(bandLimit);
  const int n = std::min(bandLimit, band_);
  std::copy_n(coeffs_.begin(), n + 1, r.coeffs_.begin());
  return r;
}

FourierField FourierField::withoutMean() const {
  FourierField r(*this);
  r.coeffs_[0] = 0.0;
  return r;
}

double FourierField::norm() const {
  double s = std::norm(coeffs_[0]);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) s += 2.0 * std::norm(coeffs_[k]);
  return std::sqrt(s);
}

double FourierField::maxCoeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool FourierField::isFinite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

FourierField& FourierField::operator+=(const FourierField& o) {
  requireSameBand(*this, o, "operator+");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

FourierField& FourierField::operator-=(const FourierField& o) {
  requireSameBand(*this, o, "operator-");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

FourierField& FourierField::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

FourierField operator+(FourierField a, const FourierField& b) { return a += b; }
FourierField operator-(FourierField a, const FourierField& b) { return a -= b; }
FourierField operator-(FourierField a) { return a *= -1.0; }
FourierField operator*(double s, FourierField a) { return a *= s; }
FourierField operator*(FourierField a, double s) { return a *= s; }

double maxCoeffDistance(const FourierField& a, const FourierField& b) {
  const int n = std::max(a.bandLimit(), b.bandLimit());
  double m = 0.0;
  for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
  return m;
}

FourierField multiply(const FourierField& a, const FourierField& b) {
  return sumOfProducts({{a, b, 1.0}});
}

FourierField sumOfProducts(std::initializer_list<ProductTerm> terms) {
  if (terms.size() == 0) throw DimensionError("sumOfProducts: no terms");
  const int band = terms.begin()->left.bandLimit();
  for (const auto& t : terms) {
    if (t.left.bandLimit() != band || t.right.bandLimit() != band) {
      throw DimensionError("sumOfProducts: band limits differ");
    }
  }
  const int m = productGrid(band);
  const auto& kern = simd::kernels();
  std::vector<double> acc(static_cast<std::size_t>(m), 0.0);
  std::vector<double> prod(static_cast<std::size_t>(m));
  for (const auto& t : terms) {
    const std::vector<double> l = t.left.samples(m);
    const std::vector<double> r = &t.left == &t.right ? l : t.right.samples(m);
    kern.mul(l.data(), r.data(), prod.data(), prod.size());
    kern.axpy(t.weight, prod.data(), acc.data(), acc.size());
  }
  return FourierField::fromSamples(acc, band);
}

}  // namespace srgeo
