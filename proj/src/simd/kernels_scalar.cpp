#include <cmath>

#include "srgeo/simd/kernels.hpp"

namespace srgeo::simd::detail {
namespace {

void mulScalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void mulAddScalar(const double* a, const double* b, const double* c, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i] + c[i];
}

void axpyScalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void xpayScalar(const double* x, double alpha, const double* y, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + alpha * y[i];
}

// Four interleaved partial sums; the vector variants use the same lane
// grouping so that results differ only by the final horizontal add.
double sumScalar(const double* a, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int l = 0; l < 4; ++l) acc[l] += a[i + l];
  }
  for (; i < n; ++i) acc[0] += a[i];
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double dotScalar(const double* a, const double* b, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int l = 0; l < 4; ++l) acc[l] += a[i + l] * b[i + l];
  }
  for (; i < n; ++i) acc[0] += a[i] * b[i];
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double maxAbsScalar(const double* a, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(a[i]));
  return m;
}

void trigEvalScalar(const std::complex<double>* c, std::size_t ncoeff, const double* x,
                    double* value, double* deriv, std::size_t npts) {
  for (std::size_t j = 0; j < npts; ++j) {
    const double er = std::cos(x[j]);
    const double ei = std::sin(x[j]);
    double zr = 1.0, zi = 0.0;
    double v = 0.0, d = 0.0;
    for (std::size_t k = 1; k < ncoeff; ++k) {
      const double nr = zr * er - zi * ei;
      const double ni = zr * ei + zi * er;
      zr = nr;
      zi = ni;
      const double cr = c[k].real(), ci = c[k].imag();
      v += cr * zr - ci * zi;
      d -= static_cast<double>(k) * (cr * zi + ci * zr);
    }
    value[j] = (ncoeff > 0 ? c[0].real() : 0.0) + 2.0 * v;
    if (deriv) deriv[j] = 2.0 * d;
  }
}

}  // namespace

const KernelTable kScalarKernels = {
    mulScalar, mulAddScalar, axpyScalar, xpayScalar, sumScalar,
    dotScalar, maxAbsScalar, trigEvalScalar,
};

}  // namespace srgeo::simd::detail
