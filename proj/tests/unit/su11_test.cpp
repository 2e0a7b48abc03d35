#include <cmath>
#include <numbers>

#include "doctest.h"
#include "srgeo/checks/checks.hpp"
#include "srgeo/core/error.hpp"
#include "srgeo/oracles/oracles.hpp"
#include "srgeo/su11/embed.hpp"
#include "srgeo/su11/steering.hpp"
#include "srgeo/su11/su11.hpp"

using namespace srgeo;
using checks::randomCover;

namespace {

constexpr double kPi = std::numbers::pi;

double coverDistance(const CoverElement& a, const CoverElement& b) {
  return std::max(std::abs(a.s - b.s), std::abs(a.w - b.w));
}

}  // namespace

TEST_CASE("lorentz functions in the three regimes") {
  // elliptic: a3 dominates
  auto f = lorentzFunctions({0.3, 0.0, 0.5}, 1.0);
  CHECK(f.C == doctest::Approx(std::cos(0.4)));
  CHECK(f.S == doctest::Approx(std::sin(0.4) / 0.4));
  // hyperbolic
  f = lorentzFunctions({0.5, 0.0, 0.3}, 1.0);
  CHECK(f.C == doctest::Approx(std::cosh(0.4)));
  CHECK(f.S == doctest::Approx(std::sinh(0.4) / 0.4));
  // parabolic
  f = lorentzFunctions({0.0, 1.0, 1.0}, 2.0);
  CHECK(f.C == 1.0);
  CHECK(f.S == 2.0);
  CHECK(f.T == doctest::Approx(std::atan(2.0)));
}

TEST_CASE("continuous branch of T matches the ceil formula past the poles") {
  for (double t : {0.5, 2.0, 4.0, 7.0, 11.0, -5.0}) {
    CAPTURE(t);
    const auto f = lorentzFunctions({0.3, 0.2, 0.8}, t);
    CHECK(f.T == doctest::Approx(oracles::lorentzTCeil(0.3, 0.2, 0.8, t)).epsilon(1e-12));
  }
  // the principal branch jumps by pi at the first pole of tan(r t)
  const double r = std::sqrt(0.8 * 0.8 - 0.13);
  const double t = 0.6 * kPi / r;
  const auto cont = lorentzFunctions({0.3, 0.2, 0.8}, t);
  const auto princ = lorentzFunctions({0.3, 0.2, 0.8}, t, BranchRule::principal);
  CHECK(std::abs(cont.T - princ.T - kPi) < 1e-12);
}

TEST_CASE("pure a3 generates a rotation of the cover") {
  const CoverElement g = expCover({0.0, 0.0, 0.7}, 2.0);
  CHECK(g.s == doctest::Approx(0.7));
  CHECK(std::abs(g.w) == 0.0);
  const DiffeoGrid r = embedFn(1, g, 64);
  CHECK(r.displacement()[0] == doctest::Approx(1.4));
}

TEST_CASE("exponential matrix agrees with the series exponential") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Su11Vector a{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double t = rng.uniform(-3, 3);
    const Su11Matrix m = expMatrix(a, t);
    const auto ref = oracles::expm2(oracles::su11Generator(a.a1, a.a2, a.a3, t));
    CHECK(std::abs(m.z1 - ref[0][0]) < 1e-12);
    CHECK(std::abs(m.z2 - ref[0][1]) < 1e-12);
    CHECK(std::abs(m.determinantDefect()) < 1e-12);
  }
}

TEST_CASE("cover group is associative with inverses and projects homomorphically (property)") {
  Rng rng(22);
  const CoverElement e{};
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = randomCover(rng), b = randomCover(rng), c = randomCover(rng);
    CHECK(coverDistance(coverMul(coverMul(a, b), c), coverMul(a, coverMul(b, c))) < 1e-12);
    CHECK(coverDistance(coverMul(a, coverInverse(a)), e) < 1e-12);
    CHECK(coverDistance(coverMul(coverInverse(a), a), e) < 1e-12);
    CHECK(maxDistance(coverProject(coverMul(a, b)), coverProject(a) * coverProject(b)) < 1e-12);
  }
}

TEST_CASE("one-parameter subgroups of the cover") {
  const Su11Vector a{0.4, -0.3, 0.9};
  const auto g = expCover(a, 1.3), h = expCover(a, 2.1);
  CHECK(coverDistance(coverMul(g, h), expCover(a, 3.4)) < 1e-12);
}

TEST_CASE("embedding f_n: translation example and homomorphism") {
  CHECK(embedFnAt(1, {0.3, {0.0, 0.0}}, 1.0) == doctest::Approx(1.6));
  CHECK(embedFnAt(2, {0.3, {0.0, 0.0}}, 1.0) == doctest::Approx(1.3));
  CHECK_THROWS_AS(embedFnAt(0, {}, 0.0), ParameterError);

  Rng rng(23);
  for (int n : {1, 2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = randomCover(rng, 3.0, 0.8), b = randomCover(rng, 3.0, 0.8);
      const double th = rng.uniform(0, 2 * kPi);
      CHECK(embedFnAt(n, coverMul(a, b), th) ==
            doctest::Approx(embedFnAt(n, a, embedFnAt(n, b, th))).epsilon(1e-12));
      const double h = 1e-5;
      const double fd = (embedFnAt(n, a, th + h) - embedFnAt(n, a, th - h)) / (2 * h);
      CHECK(embedFnDerivativeAt(n, a, th) == doctest::Approx(fd).epsilon(1e-8));
    }
  }
}

TEST_CASE("f_n commutes with rotations by 2 pi / n") {
  Rng rng(24);
  const auto g = randomCover(rng, 2.0, 0.7);
  for (int n : {2, 3}) {
    const double th = 0.4, shift = 2 * kPi / n;
    CHECK(embedFnAt(n, g, th + shift) == doctest::Approx(embedFnAt(n, g, th) + shift));
  }
}

TEST_CASE("exponential in Diff(S^1) starts at the identity and follows characteristics") {
  const DiffeoGrid id = expDiffHn(2, 0.5, 0.3, 0.1, 0.0, 32);
  CHECK(supDistance(id, DiffeoGrid::identity(32)) < 1e-15);
  const DiffeoGrid g = expDiffHn(2, 0.5, 0.3, 0.1, 0.8, 32);
  for (int j = 0; j < 32; j += 5) {
    CHECK(std::abs(g.values()[j] -
                   oracles::characteristicsFlow(2, 0.5, 0.3, 0.1, 0.8, g.node(j))) < 1e-9);
  }
}

TEST_CASE("embedded chains merge equal subgroups") {
  EmbeddedChain c;
  const CoverElement a{0.2, {0.1, 0.0}}, b{0.1, {0.0, 0.2}};
  c.append(1, a);
  c.append(1, b);
  c.append(2, a);
  CHECK(c.factors().size() == 2);
  const double th = 0.7;
  CHECK(c(th) == doctest::Approx(embedFnAt(1, coverMul(a, b), embedFnAt(2, a, th))));
  CHECK(c.derivative(th) == doctest::Approx((c(th + 1e-6) - c(th - 1e-6)) / 2e-6).epsilon(1e-7));
}

TEST_CASE("zero rotation target gives an empty plan") {
  const RotationSteering r = steerToRotation(0.0, 1e-10);
  CHECK(r.plan.stages().empty());
  CHECK(r.plan.totalTime() == 0.0);
  CHECK(r.endpointError == 0.0);
  CHECK_THROWS_AS(steerToRotation(0.1, 1e-10, 0), ParameterError);
  CHECK_THROWS_AS(steerToRotation(NAN, 1e-10), ParameterError);
}

TEST_CASE("small bracket loop produces a rotation of order tau^2") {
  // k, p, -k, -p composes to the rotation tau^2 (sin cos' - cos sin') = -tau^2 as a vector
  // field; applied innermost-last this is a positive shift
  for (double tau : {0.1, 0.05, 0.025}) {
    CAPTURE(tau);
    const SteeringPlan loop({{1, tau, 0.0, 1.0}, {1, 0.0, tau, 1.0}, {1, -tau, 0.0, 1.0},
                             {1, 0.0, -tau, 1.0}});
    const EmbeddedChain end = loop.endpoint();
    double mean = 0.0, spread = 0.0;
    const int nodes = 256;
    std::vector<double> d(nodes);
    for (int j = 0; j < nodes; ++j) {
      const double th = 2 * kPi * j / nodes;
      d[j] = end(th) - th;
      mean += d[j] / nodes;
    }
    for (double v : d) spread = std::max(spread, std::abs(v - mean));
    CHECK(mean / (tau * tau) == doctest::Approx(1.0).epsilon(tau));
    CHECK(spread < 4 * tau * tau * tau);
  }
}

TEST_CASE("rotation steering reaches the target horizontally") {
  for (int n : {1, 2}) {
    const RotationSteering r = steerToRotation(0.7, 1e-10, n);
    CHECK(r.endpointError < 1e-10);
    CHECK(r.pieces == 2);
    CHECK(r.plan.maxSubgroup() == n);
    CHECK(measureHorizontality(r.plan, 4, 64) < 1e-9);
    const EmbeddedChain end = r.plan.endpoint();
    CHECK(end(1.0) == doctest::Approx(1.7));
  }
}

TEST_CASE("plan log derivative vanishes outside the stages and is band limited") {
  const SteeringPlan plan = steerToRotation(0.3, 1e-10, 2).plan;
  const FourierField u = plan.logDerivative(0.5 * plan.stages().front().duration, 4);
  CHECK(u.coeff(0) == 0.0);
  CHECK(u.coeff(1) == 0.0);
  CHECK(std::abs(u.coeff(2)) > 0.0);
  CHECK(plan.logDerivative(plan.totalTime() + 1.0, 4).maxCoeff() == 0.0);
}

TEST_CASE("centre steering solves the 2x2 slope system") {
  const CocycleParams cp{0.5, 0.1};
  CHECK(centralSlope(1, cp, CentralSlopes::paper) == doctest::Approx(-0.4));
  CHECK(centralSlope(2, cp, CentralSlopes::paper) == doctest::Approx(-0.1));
  CHECK(centralSlope(1, cp, CentralSlopes::lifted) == doctest::Approx(-0.3));
  CHECK(centralSlope(2, cp, CentralSlopes::lifted) == doctest::Approx(-0.45));

  const CenterSteering c = steerVirasoroCenter(0.2, 0.1, cp);
  // r1 + r2 = 0.2 and -0.4 r1 - 0.1 r2 = 0.1 by hand
  CHECK(c.r1 == doctest::Approx(-0.4));
  CHECK(c.r2 == doctest::Approx(0.6));
  CHECK(c.determinant == doctest::Approx(0.3));
  CHECK(c.roundTrip < 1e-14);
  CHECK(c.endpointError < 1e-9);
  CHECK(c.plan.stages().front().subgroup == 2);
  CHECK(c.plan.stages().back().subgroup == 1);
  CHECK_THROWS_AS(steerVirasoroCenter(0.2, 0.1, {0.5, 0.0}), ParameterError);
}

TEST_CASE("plan JSON lists every stage") {
  const SteeringPlan plan = steerToRotation(0.3, 1e-10).plan;
  const auto j = planJson(plan);
  CHECK(j["stages"].size() == plan.stages().size());
  CHECK(j["total_time"].get<double>() == doctest::Approx(plan.totalTime()));
  const auto& s0 = j["stages"][0];
  CHECK(s0.contains("coverElement"));
  CHECK(s0["subgroup"] == 1);
}
