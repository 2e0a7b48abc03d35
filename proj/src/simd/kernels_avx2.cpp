#include <cmath>

#include "srgeo/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define SRGEO_HAVE_AVX2_KERNELS 1
#define SRGEO_AVX2 __attribute__((target("avx2,fma")))
#endif

namespace srgeo::simd::detail {

#ifdef SRGEO_HAVE_AVX2_KERNELS
namespace {

SRGEO_AVX2 void mulAvx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

SRGEO_AVX2 void mulAddAvx2(const double* a, const double* b, const double* c, double* out,
                           std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(p, _mm256_loadu_pd(c + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i] + c[i];
}

SRGEO_AVX2 void axpyAvx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), p));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

SRGEO_AVX2 void xpayAvx2(const double* x, double alpha, const double* y, double* out,
                         std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(x + i), p));
  }
  for (; i < n; ++i) out[i] = x[i] + alpha * y[i];
}

SRGEO_AVX2 double sumAvx2(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (; i < n; ++i) lanes[0] += a[i];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

SRGEO_AVX2 double dotAvx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  for (; i < n; ++i) lanes[0] += a[i] * b[i];
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

SRGEO_AVX2 double maxAbsAvx2(const double* a, std::size_t n) {
  const __m256d signMask = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    m = _mm256_max_pd(m, _mm256_andnot_pd(signMask, _mm256_loadu_pd(a + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double r = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; i < n; ++i) r = std::fmax(r, std::fabs(a[i]));
  return r;
}

// Four evaluation points per register; the harmonic recurrence
// z_k = z_{k-1} e^{ix} runs in lock-step across lanes.
SRGEO_AVX2 void trigEvalAvx2(const std::complex<double>* c, std::size_t ncoeff, const double* x,
                             double* value, double* deriv, std::size_t npts) {
  const double c0 = ncoeff > 0 ? c[0].real() : 0.0;
  std::size_t j = 0;
  for (; j + 4 <= npts; j += 4) {
    alignas(32) double er[4], ei[4];
    for (int l = 0; l < 4; ++l) {
      er[l] = std::cos(x[j + l]);
      ei[l] = std::sin(x[j + l]);
    }
    const __m256d ver = _mm256_load_pd(er);
    const __m256d vei = _mm256_load_pd(ei);
    __m256d zr = _mm256_set1_pd(1.0);
    __m256d zi = _mm256_setzero_pd();
    __m256d v = _mm256_setzero_pd();
    __m256d d = _mm256_setzero_pd();
    for (std::size_t k = 1; k < ncoeff; ++k) {
      const __m256d nr = _mm256_sub_pd(_mm256_mul_pd(zr, ver), _mm256_mul_pd(zi, vei));
      const __m256d ni = _mm256_add_pd(_mm256_mul_pd(zr, vei), _mm256_mul_pd(zi, ver));
      zr = nr;
      zi = ni;
      const __m256d cr = _mm256_set1_pd(c[k].real());
      const __m256d ci = _mm256_set1_pd(c[k].imag());
      v = _mm256_add_pd(v, _mm256_sub_pd(_mm256_mul_pd(cr, zr), _mm256_mul_pd(ci, zi)));
      const __m256d kk = _mm256_set1_pd(static_cast<double>(k));
      d = _mm256_sub_pd(
          d, _mm256_mul_pd(kk, _mm256_add_pd(_mm256_mul_pd(cr, zi), _mm256_mul_pd(ci, zr))));
    }
    const __m256d two = _mm256_set1_pd(2.0);
    _mm256_storeu_pd(value + j, _mm256_add_pd(_mm256_set1_pd(c0), _mm256_mul_pd(two, v)));
    if (deriv) _mm256_storeu_pd(deriv + j, _mm256_mul_pd(two, d));
  }
  if (j < npts) {
    kScalarKernels.trig_eval(c, ncoeff, x + j, value + j, deriv ? deriv + j : nullptr, npts - j);
  }
}

const KernelTable kAvx2Kernels = {
    mulAvx2, mulAddAvx2, axpyAvx2, xpayAvx2, sumAvx2, dotAvx2, maxAbsAvx2, trigEvalAvx2,
};

}  // namespace

const KernelTable* avx2Kernels() { return &kAvx2Kernels; }
#else
const KernelTable* avx2Kernels() { return nullptr; }
#endif

}  // namespace srgeo::simd::detail
