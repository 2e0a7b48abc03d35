#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "srgeo/checks/checks.hpp"
#include "srgeo/core/error.hpp"
#include "srgeo/geodesic/factorize.hpp"
#include "srgeo/geodesic/integrator.hpp"
#include "srgeo/geodesic/tau.hpp"
#include "srgeo/geodesic/trajectory_io.hpp"
#include "srgeo/fourier/algebra.hpp"
#include "srgeo/group/diffeo.hpp"

using namespace srgeo;
using checks::randomField;

namespace {

std::vector<Model> allModels() {
  const CocycleParams cp{0.6, 0.2};
  return {Model::h10(), Model::hab(MetricParams(1.0, 1.0)), Model::vir10(cp),
          Model::virab(MetricParams(0.5, 0.5), cp), Model::kahler(MetricParams(1.0, 0.5))};
}

}  // namespace

TEST_CASE("model names and inertia symbols") {
  const auto models = allModels();
  CHECK(models[0].name() == "h10");
  CHECK(models[4].name() == "kahler");
  CHECK(models[0].inertia(3) == 1.0);
  CHECK(models[1].inertia(3) == doctest::Approx(10.0));
  CHECK(models[4].inertia(-2) == doctest::Approx(2.0 * 3.0));
  CHECK(models[4].lambdaSign() == -1.0);
  CHECK(models[2].isVirasoro());
  CHECK_FALSE(models[1].isVirasoro());
}

TEST_CASE("h10 right-hand side is 3uu' + 2 lambda u'") {
  Rng rng(1);
  const FourierField u = randomField(rng, 16, 5, 0.5);
  const FourierField rhs = geodesicRHS(Model::h10(), {u, 0.3, 0.0});
  const FourierField ref = (3.0 * multiply(u, u.derivative()) + 0.6 * u.derivative()).withoutMean();
  CHECK(maxCoeffDistance(rhs, ref) < 1e-14);
}

TEST_CASE("vir10 right-hand side is the KdV-type equation") {
  Rng rng(2);
  const CocycleParams cp{0.4, 0.7};
  const FourierField u = randomField(rng, 16, 5, 0.5);
  const double l1 = 0.3, l2 = 1.2;
  const FourierField rhs = geodesicRHS(Model::vir10(cp), {u, l1, l2});
  const FourierField ref = 3.0 * multiply(u, u.derivative()) +
                           (2.0 * l1 - l2 * cp.mu) * u.derivative() +
                           (l2 * cp.nu) * u.derivative(3);
  CHECK(maxCoeffDistance(rhs, ref.withoutMean()) < 1e-13);
}

TEST_CASE("right-hand sides agree with the weak form for every model (property)") {
  Rng rng(3);
  for (const Model& model : allModels()) {
    CAPTURE(model.name());
    for (int trial = 0; trial < 5; ++trial) {
      const GeodesicState s{randomField(rng, 12, 12, 0.5), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      const FourierField strong = geodesicRHS(model, s);
      const FourierField weak = geodesicRHSWeakForm(model, s);
      CHECK(maxCoeffDistance(strong, weak) <= 1e-11 * std::max(1.0, strong.maxCoeff()));
    }
  }
}

TEST_CASE("linear symbol is the lambda-dependent part of the right-hand side") {
  Rng rng(4);
  for (const Model& model : allModels()) {
    CAPTURE(model.name());
    const GeodesicState s{randomField(rng, 10, 10, 0.5), 0.7, -0.4};
    const FourierField full = geodesicRHS(model, s);
    const FourierField bare = geodesicRHS(model, {s.u, 0.0, 0.0});
    for (int k = 1; k <= 10; ++k) {
      const auto expected = linearSymbol(model, s, k) * s.u.coeff(k);
      CHECK(std::abs(full.coeff(k) - bare.coeff(k) - expected) < 1e-12);
    }
  }
}

TEST_CASE("coadjoint force has zero mean, so lambda is held") {
  Rng rng(5);
  for (const Model& model : allModels()) {
    const GeodesicState s{randomField(rng, 10, 10, 0.5), 0.5, 0.5};
    CHECK(std::abs(lambdaRate(model, s)) < 1e-13);
  }
}

TEST_CASE("energy is conserved for every model (property)") {
  Rng rng(6);
  for (const Model& model : allModels()) {
    CAPTURE(model.name());
    const GeodesicState s0{randomField(rng, 16, 4, 0.3), 0.4, 0.8};
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.steps = 300;
    cfg.scheme = linearStiffness(model, s0, cfg.dt) > 2.0 ? Scheme::ifrk4 : Scheme::rk4;
    const Trajectory traj = integrate(model, s0, cfg);
    CHECK(traj.diagnostics.maxEnergyDrift < 1e-8);
    CHECK(traj.states.size() == 301);
    CHECK(traj.times.back() == doctest::Approx(0.3));
  }
}

TEST_CASE("IFRK4 and RK4 agree on a non-stiff run") {
  Rng rng(7);
  const Model model = Model::vir10({0.5, 0.05});
  const GeodesicState s0{randomField(rng, 8, 4, 0.3), 0.5, 1.0};
  IntegratorConfig cfg;
  cfg.dt = 1e-3;
  cfg.steps = 500;
  cfg.sampleEvery = 500;
  const Trajectory a = integrate(model, s0, cfg);
  cfg.scheme = Scheme::ifrk4;
  const Trajectory b = integrate(model, s0, cfg);
  CHECK(maxCoeffDistance(a.states.back().u, b.states.back().u) < 1e-10);
}

TEST_CASE("IFRK4 stays stable on stiff KdV where RK4 diverges") {
  const Model model = Model::vir10({0.0, 1.0});
  GeodesicState s0{FourierField::sine(64, 2, 1e-4), 0.0, 1.0};
  IntegratorConfig cfg;
  cfg.dt = 1e-3;
  cfg.steps = 200;
  CHECK(linearStiffness(model, s0, cfg.dt) > 2.8);
  CHECK_THROWS_AS(integrate(model, s0, cfg), DivergenceError);
  const PartialRun partial = integratePartial(model, s0, cfg);
  CHECK(partial.diverged);
  CHECK(partial.lastValidTime < 0.2);
  CHECK_FALSE(partial.trajectory.states.empty());
  cfg.scheme = Scheme::ifrk4;
  const Trajectory ok = integrate(model, s0, cfg);
  CHECK(ok.diagnostics.maxEnergyDrift < 1e-10);
}

TEST_CASE("integrator rejects bad configurations") {
  IntegratorConfig cfg;
  cfg.dt = 0.0;
  CHECK_THROWS_AS(integrate(Model::h10(), {FourierField(4), 0, 0}, cfg), ParameterError);
  cfg.dt = 1e-3;
  cfg.sampleEvery = 0;
  CHECK_THROWS_AS(integrate(Model::h10(), {FourierField(4), 0, 0}, cfg), ParameterError);
  CHECK_THROWS_AS(MetricParams(-1.0, 0.25), ParameterError);
}

TEST_CASE("p0 + small k2 initial data: factorization into rotation and horizontal part") {
  FourierField u0 = FourierField::constant(16, 1.0);
  u0 += FourierField::sine(16, 2, 0.01);
  IntegratorConfig cfg;
  cfg.steps = 200;
  cfg.projectMean = false;
  const Trajectory traj = integrate(Model::h10(), {u0, 0.0, 0.0}, cfg);
  std::vector<FourierField> uR;
  for (const auto& s : traj.states) uR.push_back(s.u);
  const Factorization f = factorizeSR(uR, cfg.dt);
  CHECK(f.lambda == doctest::Approx(1.0));
  CHECK(std::abs(mean(f.uSR.back())) < 1e-14);
  CHECK(geodesicResidual(Model::h10(), f.uSR, f.lambda, 0.0, cfg.dt) < 1e-8);

  // a perturbed series is rejected
  uR[100] += FourierField::cosine(16, 3, 1e-3);
  CHECK_THROWS_AS(factorizeSR(uR, cfg.dt), InputError);
}

TEST_CASE("tau inversion of a rotation is exact") {
  // gamma(t) = rotation by c t, y constant: x(t) = int_0^t Ad_{rot(c(s - t))} y ds
  const int band = 8, grid = 64;
  const double c = 0.7, dt = 1e-2;
  const FourierField y = FourierField::cosine(band, 2, 1.0);
  std::vector<DiffeoGrid> gamma;
  std::vector<FourierField> ys, us;
  for (int i = 0; i <= 100; ++i) {
    gamma.push_back(DiffeoGrid::rotation(grid, c * dt * i));
    ys.push_back(y);
    us.push_back(FourierField::constant(band, c));
  }
  const auto x = invertTau(gamma, ys, dt);
  CHECK(tauResidual(us, x, ys, dt) < 1e-7);
  CHECK(x.front().maxCoeff() < 1e-15);
  // x_t = y + c x' mode by mode: x_2(t) = (e^{2ict} - 1)/(2ic) y_2
  const double t = 1.0;
  const std::complex<double> ref =
      (std::exp(std::complex<double>(0.0, 2.0 * c * t)) - 1.0) /
      std::complex<double>(0.0, 2.0 * c) * y.coeff(2);
  CHECK(std::abs(x.back().coeff(2) - ref) < 1e-7);
}

TEST_CASE("tau inversion requires gamma(0) = id") {
  std::vector<DiffeoGrid> gamma = {DiffeoGrid::rotation(16, 0.1)};
  std::vector<FourierField> y = {FourierField(4)};
  CHECK_THROWS_AS(invertTau(gamma, y, 0.1), InputError);
}

TEST_CASE("trajectory CSV and summary") {
  const Model model = Model::vir10({0.0, 1.0});
  IntegratorConfig cfg;
  cfg.steps = 4;
  cfg.sampleEvery = 2;
  const Trajectory traj = integrate(model, {FourierField::cosine(2, 1, 0.1), 0.5, 1.0}, cfg);
  std::ostringstream os;
  writeTrajectoryCsv(os, model, traj);
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  CHECK(header == "t,energy,lambda1,lambda2,re_0,im_0,re_1,im_1,re_2,im_2");
  int rows = 0;
  for (std::string line; std::getline(is, line);) ++rows;
  CHECK(rows == 3);
  const auto j = trajectorySummary(model, cfg, traj);
  CHECK(j["model"] == "vir10");
  CHECK(j["params"]["nu"] == 1.0);
  CHECK(j["drift"].contains("energy_relative"));
}
