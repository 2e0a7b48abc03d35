#include <cmath>
#include <numbers>

#include "doctest.h"
#include "srgeo/core/error.hpp"
#include "srgeo/core/random.hpp"
#include "srgeo/finite/frame.hpp"
#include "srgeo/finite/martinet.hpp"
#include "srgeo/oracles/oracles.hpp"

using namespace srgeo;

namespace {

VectorXd vec(double a, double b, double c) {
  VectorXd v(3);
  v << a, b, c;
  return v;
}

VectorXd unit(int i) {
  VectorXd v = VectorXd::Zero(3);
  v(i) = 1.0;
  return v;
}

// a non-nilpotent frame with all structure functions non-zero somewhere
MatrixXd twistedFrame(const VectorXd& m) {
  MatrixXd f = MatrixXd::Identity(3, 3);
  f(2, 0) = std::sin(m(1));
  f(0, 1) = 0.3 * m(2);
  f(1, 2) = 0.2 * std::cos(m(0));
  f(2, 1) = 0.5 * m(0) * m(0);
  return f;
}

// <x, d theta(X_a, X_b)> by the coframe oracle
double oracleContraction(const oracles::FrameFn& frame, const VectorXd& m, const VectorXd& x,
                         int a, int b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += x(i) * oracles::coframeDifferential(frame, m, i, a, b);
  return s;
}

}  // namespace

TEST_CASE("Heisenberg frame: adjoint reproduces the algebra") {
  const FrameSR h = heisenbergFrame();
  const VectorXd origin = VectorXd::Zero(3);
  const VectorXd y = vec(0.3, -0.7, 0.4), x = vec(1.1, 0.5, -2.0);
  // [X, Y] = Z is the only non-zero bracket
  const VectorXd r = frameAdjoint(h, origin, y, x);
  CHECK(r(0) == doctest::Approx(x(2) * y(1)));
  CHECK(r(1) == doctest::Approx(-x(2) * y(0)));
  CHECK(std::abs(r(2)) < 1e-9);
  const Tensor3 c = h.structure(origin);
  CHECK(c(0, 1, 2) == doctest::Approx(1.0));
  CHECK(std::abs(c(0, 2, 2)) < 1e-9);
}

TEST_CASE("Martinet frame: adjoint matches hand values at (0, y, 0)") {
  for (bool callback : {false, true}) {
    CAPTURE(callback);
    const FrameSR mf = martinetFrame(callback);
    CHECK(mf.hasConnectionCallback() == callback);
    for (double Y : {-0.8, 0.0, 0.5, 1.3}) {
      const VectorXd m = vec(0.0, Y, 0.0);
      const VectorXd y = vec(0.4, 0.9, -0.2), x = vec(-0.3, 0.6, 1.5);
      const VectorXd r = frameAdjoint(mf, m, y, x);
      CHECK(r(0) == doctest::Approx(x(2) * y(1) * Y).epsilon(1e-8).scale(1.0));
      CHECK(r(1) == doctest::Approx(-x(2) * y(0) * Y).epsilon(1e-8).scale(1.0));
      CHECK(std::abs(r(2)) < 1e-8);
    }
  }
}

TEST_CASE("Martinet structure: callback and finite differences agree") {
  const FrameSR fd = martinetFrame(false), cb = martinetFrame(true);
  Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const VectorXd m = vec(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Tensor3 a = fd.structure(m), b = cb.structure(m);
    const Tensor3 ga = fd.connection(m), gb = cb.connection(m);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
          CHECK(std::abs(a(i, j, l) - b(i, j, l)) < 1e-8);
          CHECK(std::abs(ga(i, j, l) - gb(i, j, l)) < 1e-8);
        }
  }
}

TEST_CASE("flat frame has zero adjoint") {
  const FrameSR flat(3, 2, [](const VectorXd&) { return MatrixXd::Identity(3, 3); });
  const VectorXd r = frameAdjoint(flat, vec(0.2, 0.3, 0.4), vec(1, 2, 3), vec(3, 2, 1));
  CHECK(r.norm() < 1e-12);
}

TEST_CASE("adjoint is dual to the coframe differential on random frames (property)") {
  const FrameSR sys(3, 2, twistedFrame);
  Rng rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const VectorXd m = vec(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const VectorXd x = vec(rng.normal(), rng.normal(), rng.normal());
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const double lhs = oracleContraction(twistedFrame, m, x, a, b);
        const double rhs = frameAdjoint(sys, m, unit(a), x)(b);
        CHECK(std::abs(lhs - rhs) < 1e-6);
      }
    }
  }
}

TEST_CASE("frame validation") {
  CHECK_THROWS_AS(FrameSR(3, 4, twistedFrame), ParameterError);
  CHECK_THROWS_AS(FrameSR(3, 2, {}), ParameterError);
  const FrameSR degenerate(3, 2, [](const VectorXd& m) {
    MatrixXd f = MatrixXd::Identity(3, 3);
    f(2, 2) = m(0);
    return f;
  });
  CHECK_NOTHROW(degenerate.frame(vec(1, 0, 0)));
  CHECK_THROWS_AS(degenerate.frame(vec(0, 0, 0)), GeometryError);
  CHECK_THROWS_AS(degenerate.frame(VectorXd::Zero(2)), DimensionError);
  CHECK_THROWS_AS(srNormalFlow(degenerate, {vec(0, 0, 0), vec(1, 0, 0)}, 0.01, 10),
                  GeometryError);
  CHECK_THROWS_AS(srNormalFlow(heisenbergFrame(), {vec(0, 0, 0), vec(1, 0, 0)}, 0.0, 10),
                  ParameterError);
}

TEST_CASE("zero covector gives a constant point") {
  const auto traj = srNormalFlow(heisenbergFrame(), {vec(0.3, 0.1, -0.2), VectorXd::Zero(3)},
                                 0.01, 50);
  CHECK((traj.states.back().m - vec(0.3, 0.1, -0.2)).norm() == 0.0);
  CHECK(traj.maxHamiltonianDrift == 0.0);
}

TEST_CASE("Heisenberg normal geodesics are helices (property)") {
  Rng rng(33);
  for (int trial = 0; trial < 5; ++trial) {
    const double p1 = rng.uniform(-1, 1), p2 = rng.uniform(-1, 1), p3 = rng.uniform(-3, 3);
    const auto traj =
        srNormalFlow(heisenbergFrame(), {VectorXd::Zero(3), vec(p1, p2, p3)}, 1e-3, 1000);
    const auto ref = oracles::heisenbergEndpoint(p1, p2, p3, 1.0);
    const VectorXd& m = traj.states.back().m;
    for (int i = 0; i < 3; ++i) CHECK(std::abs(m(i) - ref[i]) < 1e-6);
    CHECK(traj.maxHamiltonianDrift < 1e-8);
    CHECK(traj.maxVertical < 1e-8);
  }
}

TEST_CASE("Martinet geodesics with zero vertical costate are straight lines") {
  const auto traj =
      srNormalFlow(martinetFrame(true), {vec(0.0, 0.2, 0.0), vec(0.6, -0.8, 0.0)}, 1e-3, 1000);
  const VectorXd& m = traj.states.back().m;
  CHECK(m(0) == doctest::Approx(0.6));
  CHECK(m(1) == doctest::Approx(-0.6));
  CHECK(traj.maxVertical < 1e-8);
  for (const auto& s : traj.states) CHECK(std::abs(s.p(2)) < 1e-14);
}

TEST_CASE("Martinet variation: leading coefficient and sign") {
  const auto sinPi = namedProfile("sin_pi");
  const MartinetVariation v = martinetVariation(sinPi, 1e-2);
  CHECK(v.ratio == doctest::Approx(-0.25).epsilon(0.01));
  CHECK(v.leadingTerm == doctest::Approx(-0.25).epsilon(1e-9));
  CHECK(v.endpointZ < 0.0);
  CHECK(v.fieldW < 1e-10);
  const MartinetVariation q = martinetVariation(namedProfile("t1mt"), 1e-2);
  CHECK(q.ratio == doctest::Approx(-1.0 / 60).epsilon(0.01));
  CHECK(martinetVariation(namedProfile("zero"), 0.5).endpointZ == 0.0);
}

TEST_CASE("Martinet variation: O(s) approach with a tangential component") {
  const auto v = namedProfile("sin_pi");
  const ScalarFn u = [](double t) { return std::sin(2 * std::numbers::pi * t); };
  const ScalarFn du = [](double t) {
    return 2 * std::numbers::pi * std::cos(2 * std::numbers::pi * t);
  };
  double prev = 0.0;
  for (double s : {1e-1, 1e-2, 1e-3}) {
    const MartinetVariation r = martinetVariation(v, s, 2000, u, du);
    const double gap = std::abs(r.ratio - r.leadingTerm);
    CHECK(r.endpointZ < 0.0);
    CHECK(gap <= 2.0 * s);
    if (prev > 0.0) CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("Martinet variation rejects bad profiles") {
  CHECK_THROWS_AS(martinetVariation([](double t) { return t; }, 0.1), InputError);
  CHECK_THROWS_AS(martinetVariation({}, 0.1), InputError);
  const ScalarFn v = namedProfile("t1mt");
  CHECK_THROWS_AS(martinetVariation(v, 0.1, 100, [](double) { return 1.0; },
                                    [](double) { return 0.0; }),
                  InputError);
  CHECK_THROWS_AS(martinetVariation(v, 0.1, 100, v), InputError);
  CHECK_THROWS_AS(namedProfile("cubic"), InputError);
}
