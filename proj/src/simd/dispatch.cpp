#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>

#include "srgeo/core/error.hpp"
#include "srgeo/simd/kernels.hpp"

namespace srgeo::simd {

std::string_view isaName(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isaSupported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (detail::avx2Kernels() == nullptr) return false;
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon: return detail::neonKernels() != nullptr;
  }
  return false;
}

const KernelTable& kernels(Isa isa) {
  if (!isaSupported(isa)) {
    throw ParameterError("instruction set '" + std::string(isaName(isa)) +
                         "' is not available on this host");
  }
  switch (isa) {
    case Isa::avx2: return *detail::avx2Kernels();
    case Isa::neon: return *detail::neonKernels();
    default: return detail::kScalarKernels;
  }
}

namespace {

Isa bestIsa() {
  if (isaSupported(Isa::avx2)) return Isa::avx2;
  if (isaSupported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa initialIsa() {
  const char* env = std::getenv("SRGEO_SIMD");
  if (env == nullptr || *env == '\0') return bestIsa();
  const std::string want(env);
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    // an unsupported request silently falls back to the best available set
    if (want == isaName(isa)) return isaSupported(isa) ? isa : bestIsa();
  }
  return bestIsa();
}

std::once_flag gInitOnce;
std::atomic<Isa> gActive{Isa::scalar};
std::atomic<const KernelTable*> gTable{&detail::kScalarKernels};

void ensureInit() {
  std::call_once(gInitOnce, [] {
    const Isa isa = initialIsa();
    gActive.store(isa);
    gTable.store(&kernels(isa));
  });
}

void requireSameSize(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionError("span length mismatch in vector kernel");
}

}  // namespace

Isa activeIsa() {
  ensureInit();
  return gActive.load();
}

const KernelTable& kernels() {
  ensureInit();
  return *gTable.load(std::memory_order_relaxed);
}

void forceIsa(Isa isa) {
  ensureInit();
  const KernelTable& table = kernels(isa);
  gActive.store(isa);
  gTable.store(&table);
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  requireSameSize(a.size(), b.size());
  requireSameSize(a.size(), out.size());
  kernels().mul(a.data(), b.data(), out.data(), a.size());
}

void multiplyAdd(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                 std::span<double> out) {
  requireSameSize(a.size(), b.size());
  requireSameSize(a.size(), c.size());
  requireSameSize(a.size(), out.size());
  kernels().mul_add(a.data(), b.data(), c.data(), out.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  requireSameSize(x.size(), y.size());
  kernels().axpy(alpha, x.data(), y.data(), x.size());
}

double sum(std::span<const double> a) { return kernels().sum(a.data(), a.size()); }

double dot(std::span<const double> a, std::span<const double> b) {
  requireSameSize(a.size(), b.size());
  return kernels().dot(a.data(), b.data(), a.size());
}

double maxAbs(std::span<const double> a) { return kernels().max_abs(a.data(), a.size()); }

void trigEval(std::span<const std::complex<double>> coeffs, std::span<const double> x,
              std::span<double> value, std::span<double> deriv) {
  requireSameSize(x.size(), value.size());
  if (!deriv.empty()) requireSameSize(x.size(), deriv.size());
  kernels().trig_eval(coeffs.data(), coeffs.size(), x.data(), value.data(),
                      deriv.empty() ? nullptr : deriv.data(), x.size());
}

}  // namespace srgeo::simd
