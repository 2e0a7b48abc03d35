#pragma once

// Data-parallel inner loops shared by the spectral, group and integrator
// code. Every kernel has a scalar reference implementation; vector variants
// are selected once at runtime from the host's instruction set and must agree
// with the reference to round-off (see tests/unit/simd_kernels_test.cpp).

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace srgeo::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isaName(Isa isa);

struct KernelTable {
  // out[i] = a[i] * b[i]
  void (*mul)(const double* a, const double* b, double* out, std::size_t n);
  // out[i] = a[i] * b[i] + c[i]
  void (*mul_add)(const double* a, const double* b, const double* c, double* out, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // out[i] = x[i] + alpha * y[i]
  void (*xpay)(const double* x, double alpha, const double* y, double* out, std::size_t n);
  double (*sum)(const double* a, std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*max_abs)(const double* a, std::size_t n);
  // Real trigonometric sum f(x) = Re c[0] + 2 sum_{k>=1} Re(c[k] e^{ikx}) and
  // its derivative, evaluated at arbitrary points. `deriv` may be null.
  void (*trig_eval)(const std::complex<double>* c, std::size_t ncoeff, const double* x,
                    double* value, double* deriv, std::size_t npts);
};

bool isaSupported(Isa isa);

/// Kernel set chosen for this process: the best supported ISA unless the
/// SRGEO_SIMD environment variable (scalar | avx2 | neon) or forceIsa()
/// says otherwise.
Isa activeIsa();
const KernelTable& kernels();
const KernelTable& kernels(Isa isa);  // throws if unsupported on this host

/// Pins the active ISA (tests, reproducibility runs). Not thread-safe with
/// respect to concurrent kernel calls.
void forceIsa(Isa isa);

// Span conveniences over the active table.
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
void multiplyAdd(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                 std::span<double> out);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
double sum(std::span<const double> a);
double dot(std::span<const double> a, std::span<const double> b);
double maxAbs(std::span<const double> a);
void trigEval(std::span<const std::complex<double>> coeffs, std::span<const double> x,
              std::span<double> value, std::span<double> deriv = {});

namespace detail {
extern const KernelTable kScalarKernels;
const KernelTable* avx2Kernels();  // null when not compiled in
const KernelTable* neonKernels();
}  // namespace detail

}  // namespace srgeo::simd
