#include <cmath>

#include "srgeo/simd/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#define SRGEO_HAVE_NEON_KERNELS 1
#endif

namespace srgeo::simd::detail {

#ifdef SRGEO_HAVE_NEON_KERNELS
namespace {

// Two lanes per register; reductions keep four partial sums in two
// registers so the grouping matches the scalar reference.

void mulNeon(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void mulAddNeon(const double* a, const double* b, const double* c, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t p = vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    vst1q_f64(out + i, vaddq_f64(p, vld1q_f64(c + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i] + c[i];
}

void axpyNeon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void xpayNeon(const double* x, double alpha, const double* y, double* out, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vaddq_f64(vld1q_f64(x + i), vmulq_f64(va, vld1q_f64(y + i))));
  }
  for (; i < n; ++i) out[i] = x[i] + alpha * y[i];
}

double sumNeon(const double* a, std::size_t n) {
  float64x2_t lo = vdupq_n_f64(0.0), hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lo = vaddq_f64(lo, vld1q_f64(a + i));
    hi = vaddq_f64(hi, vld1q_f64(a + i + 2));
  }
  double l0 = vgetq_lane_f64(lo, 0);
  for (; i < n; ++i) l0 += a[i];
  return (l0 + vgetq_lane_f64(lo, 1)) + (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
}

double dotNeon(const double* a, const double* b, std::size_t n) {
  float64x2_t lo = vdupq_n_f64(0.0), hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    lo = vaddq_f64(lo, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    hi = vaddq_f64(hi, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  double l0 = vgetq_lane_f64(lo, 0);
  for (; i < n; ++i) l0 += a[i] * b[i];
  return (l0 + vgetq_lane_f64(lo, 1)) + (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
}

double maxAbsNeon(const double* a, std::size_t n) {
  float64x2_t m = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) m = vmaxq_f64(m, vabsq_f64(vld1q_f64(a + i)));
  double r = std::fmax(vgetq_lane_f64(m, 0), vgetq_lane_f64(m, 1));
  for (; i < n; ++i) r = std::fmax(r, std::fabs(a[i]));
  return r;
}

void trigEvalNeon(const std::complex<double>* c, std::size_t ncoeff, const double* x,
                  double* value, double* deriv, std::size_t npts) {
  const double c0 = ncoeff > 0 ? c[0].real() : 0.0;
  std::size_t j = 0;
  for (; j + 2 <= npts; j += 2) {
    const double er[2] = {std::cos(x[j]), std::cos(x[j + 1])};
    const double ei[2] = {std::sin(x[j]), std::sin(x[j + 1])};
    const float64x2_t ver = vld1q_f64(er), vei = vld1q_f64(ei);
    float64x2_t zr = vdupq_n_f64(1.0), zi = vdupq_n_f64(0.0);
    float64x2_t v = vdupq_n_f64(0.0), d = vdupq_n_f64(0.0);
    for (std::size_t k = 1; k < ncoeff; ++k) {
      const float64x2_t nr = vsubq_f64(vmulq_f64(zr, ver), vmulq_f64(zi, vei));
      const float64x2_t ni = vaddq_f64(vmulq_f64(zr, vei), vmulq_f64(zi, ver));
      zr = nr;
      zi = ni;
      const float64x2_t cr = vdupq_n_f64(c[k].real()), ci = vdupq_n_f64(c[k].imag());
      v = vaddq_f64(v, vsubq_f64(vmulq_f64(cr, zr), vmulq_f64(ci, zi)));
      const float64x2_t kk = vdupq_n_f64(static_cast<double>(k));
      d = vsubq_f64(d, vmulq_f64(kk, vaddq_f64(vmulq_f64(cr, zi), vmulq_f64(ci, zr))));
    }
    vst1q_f64(value + j, vaddq_f64(vdupq_n_f64(c0), vmulq_f64(vdupq_n_f64(2.0), v)));
    if (deriv) vst1q_f64(deriv + j, vmulq_f64(vdupq_n_f64(2.0), d));
  }
  if (j < npts) {
    kScalarKernels.trig_eval(c, ncoeff, x + j, value + j, deriv ? deriv + j : nullptr, npts - j);
  }
}

const KernelTable kNeonKernels = {
    mulNeon, mulAddNeon, axpyNeon, xpayNeon, sumNeon, dotNeon, maxAbsNeon, trigEvalNeon,
};

}  // namespace

const KernelTable* neonKernels() { return &kNeonKernels; }
#else
const KernelTable* neonKernels() { return nullptr; }
#endif

}  // namespace srgeo::simd::detail
