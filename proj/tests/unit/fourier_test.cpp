#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "srgeo/checks/checks.hpp"
#include "srgeo/core/error.hpp"
#include "srgeo/fourier/algebra.hpp"
#include "srgeo/fourier/literal.hpp"
#include "srgeo/fourier/metrics.hpp"
#include "srgeo/fourier/transform.hpp"
#include "srgeo/oracles/oracles.hpp"

using namespace srgeo;
using checks::randomField;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// cos n and sin n in the names used across the library
FourierField p(int band, int n, double amp = 1.0) {
  return n == 0 ? FourierField::constant(band, amp) : FourierField::cosine(band, n, amp);
}
FourierField k(int band, int n, double amp = 1.0) { return FourierField::sine(band, n, amp); }

oracles::TrigPoly randomPoly(Rng& rng, int degree, bool withMean = true) {
  oracles::TrigPoly t;
  t.a0 = withMean ? rng.normal() : 0.0;
  for (int i = 1; i <= degree; ++i) {
    t.a.push_back(rng.normal() / i);
    t.b.push_back(rng.normal() / i);
  }
  return t;
}

FourierField toField(const oracles::TrigPoly& t, int band) {
  FourierField f = FourierField::constant(band, t.a0);
  for (int i = 1; i <= t.degree(); ++i) {
    f += FourierField::cosine(band, i, t.a[i - 1]);
    f += FourierField::sine(band, i, t.b[i - 1]);
  }
  return f;
}

}  // namespace

TEST_CASE("real transform round-trips and matches a direct DFT") {
  Rng rng(1);
  const int m = 24;
  std::vector<double> x(m);
  for (auto& v : x) v = rng.normal();
  std::vector<Complex> half(m / 2 + 1);
  forwardReal(x, half);
  const auto direct = oracles::naiveCoefficients(
      [&](double th) { return x[static_cast<int>(std::lround(th * m / (2 * kPi))) % m]; },
      m / 2, m);
  for (int q = 0; q <= m / 2; ++q) CHECK(std::abs(half[q] - direct[q]) < 1e-13);
  std::vector<double> back(m);
  inverseReal(half, back);
  for (int j = 0; j < m; ++j) CHECK(back[j] == doctest::Approx(x[j]).epsilon(1e-13));
}

TEST_CASE("coefficient conventions for cosine and sine") {
  const FourierField c = FourierField::cosine(4, 2, 3.0);
  CHECK(c.coeff(2) == Complex(1.5, 0.0));
  CHECK(c.coeff(-2) == Complex(1.5, 0.0));
  const FourierField s = FourierField::sine(4, 1, 2.0);
  CHECK(s.coeff(1) == Complex(0.0, -1.0));
  CHECK(s.coeff(-1) == Complex(0.0, 1.0));
  CHECK(s(kPi / 2) == doctest::Approx(2.0));
  CHECK(s.coeff(7) == Complex(0.0));
}

TEST_CASE("fromFunction, samples and point evaluation agree") {
  Rng rng(2);
  const auto t = randomPoly(rng, 5);
  const FourierField f = FourierField::fromFunction(8, [&](double th) { return t(th); });
  const FourierField g = toField(t, 8);
  CHECK(maxCoeffDistance(f, g) < 1e-14);
  const auto s = f.samples(32);
  for (int j = 0; j < 32; ++j) CHECK(s[j] == doctest::Approx(t(2 * kPi * j / 32)).epsilon(1e-12));
  std::vector<double> th = {0.3, 1.7, -2.0}, val(3), der(3);
  f.evaluate(th, val, der);
  for (int i = 0; i < 3; ++i) {
    CHECK(val[i] == doctest::Approx(t(th[i])).epsilon(1e-12));
    CHECK(der[i] == doctest::Approx(t(th[i], 1)).epsilon(1e-12));
  }
  CHECK(maxCoeffDistance(f.derivative(3), FourierField::fromFunction(8, [&](double x) {
                           return t(x, 3);
                         })) < 1e-12);
}

TEST_CASE("samples need a grid of at least 2N nodes") {
  CHECK_THROWS_AS(FourierField(8).samples(10), DimensionError);
  CHECK_THROWS_AS(FourierField(-1), DimensionError);
}

TEST_CASE("dealiased product is exact on retained modes") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = randomPoly(rng, 6), b = randomPoly(rng, 6);
    const FourierField prod = multiply(toField(a, 8), toField(b, 8));
    const FourierField exact =
        FourierField::fromFunction(8, [&](double th) { return a(th) * b(th); }, 64);
    CHECK(maxCoeffDistance(prod, exact) < 1e-13);
  }
}

TEST_CASE("sumOfProducts matches separate products") {
  Rng rng(4);
  const auto x = randomField(rng, 12, 12, 1.0, true), y = randomField(rng, 12, 12, 1.0, true);
  const FourierField s = sumOfProducts({{x, y, 2.0}, {y, y, -1.0}});
  const FourierField r = 2.0 * multiply(x, y) - multiply(y, y);
  CHECK(maxCoeffDistance(s, r) < 1e-13);
}

TEST_CASE("field literals") {
  const FourierField f = parseFieldLiteral("1, 0.5, -2, 0, 3", 4);
  CHECK(f.coeff(0) == Complex(1.0));
  CHECK(f.coeff(1) == Complex(0.25, 1.0));
  CHECK(f.coeff(2) == Complex(0.0, -1.5));

  const FourierField g = parseFieldLiteral("(2, 1, 0.5) (-2, 1, 0.5) (0, 4, 0)", 4);
  CHECK(g.coeff(2) == Complex(2.0, 0.0));
  CHECK(g.coeff(0) == Complex(4.0));

  CHECK_THROWS_AS(parseFieldLiteral("1, x", 4), InputError);
  CHECK_THROWS_AS(parseFieldLiteral("(1, 2)", 4), InputError);
  CHECK_THROWS_AS(parseFieldLiteral("", 4), InputError);
  CHECK_THROWS_AS(parseFieldLiteral("0,0,0,0,1", 1), DimensionError);
  CHECK_THROWS_AS(parseFieldLiteral("(5, 1, 0)", 4), DimensionError);
}

TEST_CASE("bracket of the basic harmonics") {
  const int b = 8;
  // [p1, k1] = -p0
  CHECK(maxCoeffDistance(bracket(p(b, 1), k(b, 1)), -p(b, 0)) < 1e-15);
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    // [p0, k_n] = -n p_n and [p0, p_n] = n k_n
    CHECK(maxCoeffDistance(bracket(p(b, 0), k(b, n)), -static_cast<double>(n) * p(b, n)) <
          1e-14);
    CHECK(maxCoeffDistance(bracket(p(b, 0), p(b, n)), static_cast<double>(n) * k(b, n)) < 1e-14);
  }
}

TEST_CASE("bracket is antisymmetric and a derivation of products (property)") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = randomField(rng, 24, 8, 1.0, true);
    const auto y = randomField(rng, 24, 8, 1.0, true);
    const auto f = randomField(rng, 24, 8, 1.0, true);
    CHECK(maxCoeffDistance(bracket(x, y), -bracket(y, x)) < 1e-14);
    CHECK(bracket(x, x).maxCoeff() < 1e-14);
    // [x, f y] = f [x, y] - x f' y
    const FourierField lhs = bracket(x, multiply(f, y));
    const FourierField rhs = multiply(f, bracket(x, y)) - multiply(multiply(x, f.derivative()), y);
    CHECK(maxCoeffDistance(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("Hilbert transform matches the principal value quadrature") {
  Rng rng(6);
  const auto t = randomPoly(rng, 6);
  const FourierField jx = hilbert(toField(t, 8));
  for (double th : {0.0, 0.4, 1.9, 3.3, 5.7}) {
    const double ref = oracles::hilbertQuadrature([&](double x) { return t(x); }, th);
    CHECK(jx(th) == doctest::Approx(ref).epsilon(1e-10));
  }
  // J p_n = -k_n, J k_n = p_n, J 1 = 0
  CHECK(maxCoeffDistance(hilbert(p(6, 3)), -k(6, 3)) < 1e-15);
  CHECK(maxCoeffDistance(hilbert(k(6, 3)), p(6, 3)) < 1e-15);
  CHECK(hilbert(p(6, 0)).maxCoeff() == 0.0);
  // J^2 = -1 on mean-free fields
  const FourierField x = randomField(rng, 10, 10, 1.0);
  CHECK(maxCoeffDistance(hilbert(hilbert(x)), -x) < 1e-15);
}

TEST_CASE("L and the cocycle operator act by their symbols") {
  const MetricParams mp(2.0, 0.5);
  CHECK(maxCoeffDistance(applyL(mp, p(6, 3)), -(2.0 + 0.5 * 9) * p(6, 3)) < 1e-14);
  const CocycleParams cp{1.5, 0.25};
  CHECK(maxCoeffDistance(applyCocycleOperator(cp, k(6, 2)), -(1.5 + 0.25 * 4) * k(6, 2)) < 1e-14);
}

TEST_CASE("metric parameters are validated") {
  CHECK_THROWS_AS(MetricParams(1.0, -0.1), ParameterError);
  CHECK_THROWS_AS(MetricParams(-2.0, 1.0), ParameterError);
  CHECK_NOTHROW(MetricParams(0.0, 1.0));
  CHECK_NOTHROW(MetricParams(-0.2, 0.3).validateFor(5));
  CHECK(CocycleParams{1.0, 0.0}.trivial());
}

TEST_CASE("inner products match quadrature of their integral forms") {
  Rng rng(7);
  const MetricParams mp(0.7, 0.3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = randomPoly(rng, 5), b = randomPoly(rng, 5);
    const FourierField x = toField(a, 8), y = toField(b, 8);
    const auto avg = [](auto f) { return oracles::circleAverage(f, 512); };
    const double h10 = avg([&](double t) { return a(t) * b(t); });
    CHECK(InnerProduct::h10()(x, y) == doctest::Approx(h10).epsilon(1e-12));

    // mean-free parts weighted by alpha u v + beta u' v', plus the means
    const double hab = 0.7 * (avg([&](double t) { return a(t) * b(t); }) - a.a0 * b.a0) +
                       0.3 * avg([&](double t) { return a(t, 1) * b(t, 1); }) + a.a0 * b.a0;
    CHECK(innerProduct(InnerProduct::hab(mp), x, y) == doctest::Approx(hab).epsilon(1e-12));

    // |k| (alpha + beta k^2) = -(alpha + beta k^2) times the multiplier of J d/dtheta
    const auto coeffs = [&](const oracles::TrigPoly& t) {
      return oracles::naiveCoefficients([&](double th) { return t(th); }, 8, 64);
    };
    const auto ca = coeffs(a), cb = coeffs(b);
    double kahler = a.a0 * b.a0;
    for (int n = 1; n <= 8; ++n) {
      kahler += 2.0 * n * (0.7 + 0.3 * n * n) * (ca[n] * std::conj(cb[n])).real();
    }
    CHECK(innerProduct(InnerProduct::kahler(mp), x, y) == doctest::Approx(kahler).epsilon(1e-12));
  }
}

TEST_CASE("cocycle omega matches quadrature and the Kahler form") {
  Rng rng(8);
  const CocycleParams cp{0.8, 0.35};
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = randomPoly(rng, 5), b = randomPoly(rng, 5);
    const double ref = oracles::circleAverage(
        [&](double t) { return cp.mu * a(t) * b(t, 1) + cp.nu * a(t, 1) * b(t, 2); }, 512);
    const FourierField x = toField(a, 8), y = toField(b, 8);
    CHECK(cocycleOmega(cp, x, y) == doctest::Approx(ref).epsilon(1e-12));
    CHECK(cocycleOmega(cp, x, y) == doctest::Approx(-cocycleOmega(cp, y, x)).epsilon(1e-14));

    const MetricParams mp(cp.mu, cp.nu);
    const Complex h = kahlerCoefficientMetric(mp, fieldToTangent(x), fieldToTangent(y));
    CHECK(h.real() ==
          doctest::Approx(innerProduct(InnerProduct::kahler(mp), x.withoutMean(), y.withoutMean()))
              .epsilon(1e-12));
    CHECK(h.imag() == doctest::Approx(cocycleOmega(cp, x, y)).epsilon(1e-12));
  }
}

TEST_CASE("metric adjoints satisfy their defining identity (property)") {
  Rng rng(9);
  const MetricParams mp(1.0, 0.5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = randomField(rng, 16, 16, 1.0, true);
    const auto y = randomField(rng, 16, 16, 1.0, true);
    const auto z = randomField(rng, 16, 16, 1.0, true);
    const double lhs = InnerProduct::h10()(adjointAdT(x, y), z);
    const double rhs = InnerProduct::h10()(y, bracket(x, z));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}

TEST_CASE("Virasoro bracket carries the cocycle") {
  const CocycleParams cp{0.5, 2.0};
  const int b = 6;
  for (int n = 1; n <= 3; ++n) {
    const VirasoroVector pn{p(b, n), 0.0}, kn{k(b, n), 0.0};
    const VirasoroVector r = bracket(cp, pn, kn);
    CHECK(maxCoeffDistance(r.field, -static_cast<double>(n) * p(b, 0)) < 1e-14);
    CHECK(r.central == doctest::Approx((cp.mu * n + cp.nu * n * n * n) / 2.0));
  }
}
