#include <cmath>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "srgeo/core/csv.hpp"
#include "srgeo/core/error.hpp"
#include "srgeo/core/random.hpp"
#include "srgeo/core/timegrid.hpp"

using namespace srgeo;

TEST_CASE("time derivative is exact for quartics, including the ends") {
  const double dt = 0.1;
  std::vector<double> f;
  for (int i = 0; i < 12; ++i) {
    const double t = i * dt;
    f.push_back(1.0 - 2.0 * t + 0.5 * t * t + t * t * t - 0.25 * t * t * t * t);
  }
  const auto d = timeDerivative(f, dt);
  for (int i = 0; i < 12; ++i) {
    const double t = i * dt;
    CHECK(d[i] == doctest::Approx(-2.0 + t + 3.0 * t * t - t * t * t).epsilon(1e-11));
  }
}

TEST_CASE("derivative stencil needs five samples") {
  CHECK_THROWS_AS(derivativeStencil(0, 4), DimensionError);
}

TEST_CASE("cumulative integral converges at fourth order") {
  auto err = [](int n) {
    const double dt = 1.0 / n;
    std::vector<double> f;
    for (int i = 0; i <= n; ++i) f.push_back(std::exp(i * dt));
    return std::abs(cumulativeIntegral(f, dt).back() - (std::exp(1.0) - 1.0));
  };
  const double e1 = err(20), e2 = err(40);
  CHECK(e1 / e2 > 12.0);
  CHECK(e2 < 1e-8);
}

TEST_CASE("cumulative integral falls back to the trapezoid rule") {
  const std::vector<double> f = {1.0, 3.0};
  CHECK(cumulativeIntegral(f, 0.5).back() == doctest::Approx(1.0));
}

TEST_CASE("midpoint values are exact for cubics") {
  std::vector<std::vector<double>> s;
  for (int i = 0; i < 6; ++i) {
    const double t = i;
    s.push_back({t * t * t - t, 2.0});
  }
  for (int i = 0; i < 5; ++i) {
    const double t = i + 0.5;
    const auto m = midpointValue(s, i);
    CHECK(m[0] == doctest::Approx(t * t * t - t));
    CHECK(m[1] == doctest::Approx(2.0));
  }
}

TEST_CASE("csv rows round-trip doubles") {
  std::ostringstream os;
  {
    CsvRow row(os);
    row << 0.1 << 2 << std::string("x") << -1e-300;
  }
  CHECK(os.str() == "0.10000000000000001,2,x,-1e-300\n");
  CHECK(std::stod(formatDouble(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("random streams are reproducible") {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 10; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(a.normal() == b.normal());
  CHECK(a.uniform() != c.uniform());
  for (int i = 0; i < 100; ++i) {
    const int k = a.uniformInt(-2, 3);
    CHECK(k >= -2);
    CHECK(k <= 3);
  }
}

TEST_CASE("errors share a base class") {
  CHECK_THROWS_AS(throw DivergenceError("x", 0.5), Error);
  try {
    throw SteeringError("miss", 1e-3);
  } catch (const SteeringError& e) {
    CHECK(e.residual() == 1e-3);
  }
}
