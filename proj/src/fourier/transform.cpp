#include "srgeo/fourier/transform.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

#include "srgeo/core/error.hpp"

namespace srgeo {
namespace {

struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [size, plans] : plans_) {
      fftw_destroy_plan(plans.r2c);
      fftw_destroy_plan(plans.c2r);
    }
  }

  PlanPair get(int m) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = plans_.find(m);
    if (it != plans_.end()) return it->second;
    // FFTW_ESTIMATE leaves the scratch arrays untouched; UNALIGNED lets the
    // new-array execute functions run on caller-owned vectors.
    std::vector<double> real(static_cast<std::size_t>(m));
    std::vector<fftw_complex> cplx(static_cast<std::size_t>(m / 2 + 1));
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    p.r2c = fftw_plan_dft_r2c_1d(m, real.data(), cplx.data(), flags);
    p.c2r = fftw_plan_dft_c2r_1d(m, cplx.data(), real.data(), flags | FFTW_DESTROY_INPUT);
    if (p.r2c == nullptr || p.c2r == nullptr) throw Error("FFTW planning failed");
    plans_.emplace(m, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<int, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void forwardReal(std::span<const double> samples, std::span<std::complex<double>> half) {
  const int m = static_cast<int>(samples.size());
  if (m < 1 || half.size() != static_cast<std::size_t>(m / 2 + 1)) {
    throw DimensionError("forwardReal: output must hold M/2+1 coefficients");
  }
  const PlanPair p = cache().get(m);
  std::vector<double> in(samples.begin(), samples.end());
  fftw_execute_dft_r2c(p.r2c, in.data(), reinterpret_cast<fftw_complex*>(half.data()));
  const double scale = 1.0 / m;
  for (auto& c : half) c *= scale;
}

void inverseReal(std::span<const std::complex<double>> half, std::span<double> samples) {
  const int m = static_cast<int>(samples.size());
  if (m < 1 || half.size() != static_cast<std::size_t>(m / 2 + 1)) {
    throw DimensionError("inverseReal: input must hold M/2+1 coefficients");
  }
  const PlanPair p = cache().get(m);
  std::vector<std::complex<double>> in(half.begin(), half.end());
  in[0].imag(0.0);
  if (m % 2 == 0) in.back().imag(0.0);
  fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(in.data()), samples.data());
}

}  // namespace srgeo
