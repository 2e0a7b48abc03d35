#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "srgeo/core/error.hpp"
#include "srgeo/core/random.hpp"
#include "srgeo/simd/kernels.hpp"

using namespace srgeo;
using namespace srgeo::simd;

namespace {

std::vector<double> randomVec(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(-2.0, 2.0);
  return v;
}

double maxDiff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Every vector ISA compiled in and supported here.
std::vector<Isa> vectorIsas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (isaSupported(isa)) out.push_back(isa);
  }
  return out;
}

}  // namespace

TEST_CASE("scalar kernels are always available") {
  CHECK(isaSupported(Isa::scalar));
  CHECK(isaName(Isa::scalar) == "scalar");
  CHECK(isaSupported(activeIsa()));
}

TEST_CASE("vector kernels agree with the scalar reference") {
  const auto isas = vectorIsas();
  if (isas.empty()) {
    MESSAGE("no vector ISA on this host; equivalence not exercised");
    return;
  }
  const KernelTable& ref = kernels(Isa::scalar);
  Rng rng(11);
  for (Isa isa : isas) {
    const KernelTable& vec = kernels(isa);
    CAPTURE(isaName(isa));
    // sizes straddling the vector width exercise the tails
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 13u, 64u, 257u}) {
      CAPTURE(n);
      const auto a = randomVec(rng, n), b = randomVec(rng, n), c = randomVec(rng, n);
      std::vector<double> r1(n), r2(n);

      ref.mul(a.data(), b.data(), r1.data(), n);
      vec.mul(a.data(), b.data(), r2.data(), n);
      CHECK(maxDiff(r1, r2) == 0.0);

      ref.mul_add(a.data(), b.data(), c.data(), r1.data(), n);
      vec.mul_add(a.data(), b.data(), c.data(), r2.data(), n);
      CHECK(maxDiff(r1, r2) <= 1e-15);

      r1 = c;
      r2 = c;
      ref.axpy(0.7, a.data(), r1.data(), n);
      vec.axpy(0.7, a.data(), r2.data(), n);
      CHECK(maxDiff(r1, r2) <= 1e-15);

      ref.xpay(a.data(), -1.3, b.data(), r1.data(), n);
      vec.xpay(a.data(), -1.3, b.data(), r2.data(), n);
      CHECK(maxDiff(r1, r2) <= 1e-15);

      CHECK(std::abs(ref.sum(a.data(), n) - vec.sum(a.data(), n)) <= 1e-13);
      CHECK(std::abs(ref.dot(a.data(), b.data(), n) - vec.dot(a.data(), b.data(), n)) <= 1e-13);
      CHECK(ref.max_abs(a.data(), n) == vec.max_abs(a.data(), n));
    }
  }
}

TEST_CASE("trigonometric evaluation kernels agree and match direct sums") {
  Rng rng(12);
  const std::size_t nc = 17, np = 37;
  std::vector<std::complex<double>> c(nc);
  for (auto& z : c) z = {rng.normal(), rng.normal()};
  const auto x = randomVec(rng, np);

  std::vector<double> v(np), d(np);
  kernels(Isa::scalar).trig_eval(c.data(), nc, x.data(), v.data(), d.data(), np);
  for (std::size_t j = 0; j < np; ++j) {
    double dv = c[0].real(), dd = 0.0;
    for (std::size_t k = 1; k < nc; ++k) {
      const std::complex<double> e = std::polar(1.0, static_cast<double>(k) * x[j]);
      dv += 2.0 * (c[k] * e).real();
      dd += 2.0 * (c[k] * std::complex<double>(0.0, static_cast<double>(k)) * e).real();
    }
    CHECK(v[j] == doctest::Approx(dv).epsilon(1e-12));
    CHECK(d[j] == doctest::Approx(dd).epsilon(1e-12));
  }
  for (Isa isa : vectorIsas()) {
    std::vector<double> v2(np), d2(np);
    kernels(isa).trig_eval(c.data(), nc, x.data(), v2.data(), d2.data(), np);
    CHECK(maxDiff(v, v2) <= 1e-12);
    CHECK(maxDiff(d, d2) <= 1e-12);
    kernels(isa).trig_eval(c.data(), nc, x.data(), v2.data(), nullptr, np);
    CHECK(maxDiff(v, v2) <= 1e-12);
  }
}

TEST_CASE("span wrappers reject mismatched sizes") {
  std::vector<double> a(4, 1.0), b(3, 1.0), out(4);
  CHECK_THROWS_AS(multiply(a, b, out), DimensionError);
  CHECK_THROWS_AS(dot(a, b), DimensionError);
  CHECK(sum(a) == 4.0);
}

TEST_CASE("forcing the scalar table gives the same results through the span API") {
  Rng rng(13);
  const auto a = randomVec(rng, 101), b = randomVec(rng, 101);
  const Isa before = activeIsa();
  const double d1 = dot(a, b);
  forceIsa(Isa::scalar);
  CHECK(activeIsa() == Isa::scalar);
  const double d2 = dot(a, b);
  forceIsa(before);
  CHECK(d1 == doctest::Approx(d2).epsilon(1e-14));
}
