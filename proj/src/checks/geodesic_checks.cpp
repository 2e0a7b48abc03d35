#include <algorithm>
#include <cmath>
#include <numbers>

#include "common.hpp"
#include "srgeo/geodesic/factorize.hpp"
#include "srgeo/geodesic/integrator.hpp"
#include "srgeo/geodesic/tau.hpp"
#include "srgeo/group/flow.hpp"

namespace srgeo::checks {

namespace {

using detail::runCriterion;
using detail::streamFor;

Scheme autoScheme(const Model& model, const GeodesicState& s, double dt) {
  return linearStiffness(model, s, dt) > 2.0 ? Scheme::ifrk4 : Scheme::rk4;
}

std::vector<FourierField> fields(const Trajectory& traj) {
  std::vector<FourierField> u;
  u.reserve(traj.states.size());
  for (const auto& s : traj.states) u.push_back(s.u);
  return u;
}

Criterion conservation(const CheckOptions& opts) {
  return runCriterion(3, "conservation along the five geodesic models", [&](Criterion& c) {
    Rng rng = streamFor(opts, 3);
    const int band = 32;
    const CocycleParams cp{0.5, 0.1};
    const std::vector<std::pair<Model, GeodesicState>> runs = {
        {Model::h10(), {randomField(rng, band, 6, 0.3), 0.5, 0.0}},
        {Model::hab(MetricParams(1.0, 1.0)), {randomField(rng, band, 6, 0.3), 0.5, 0.0}},
        {Model::vir10(cp), {randomField(rng, band, 6, 0.3), 0.5, 1.0}},
        {Model::virab(MetricParams(1.0, 0.5), cp), {randomField(rng, band, 6, 0.3), 0.5, 1.0}},
        {Model::kahler(MetricParams(1.0, 0.5)), {randomField(rng, band, 6, 0.3), 0.5, 0.0}},
    };
    for (const auto& [model, s0] : runs) {
      IntegratorConfig cfg;
      cfg.dt = 1e-3;
      cfg.steps = 1000;
      cfg.sampleEvery = 1000;
      cfg.scheme = autoScheme(model, s0, cfg.dt);
      const Trajectory traj = integrate(model, s0, cfg);
      c.add(model.name() + " energy drift (relative)", traj.diagnostics.maxEnergyDrift, 1e-6);
      c.add(model.name() + " max |mean u|", traj.diagnostics.maxAbsMean, 1e-10);
      c.add(model.name() + " max |mean of coadjoint force|", traj.diagnostics.maxLambdaRate,
            1e-10);
    }
  });
}

Criterion factorization(const CheckOptions& opts) {
  return runCriterion(4, "Riemannian/sub-Riemannian factorization", [&](Criterion& c) {
    (void)opts;  // deterministic initial datum
    const int band = 32;
    const int grid = 256;
    FourierField u0 = FourierField::constant(band, 1.0);
    u0 += FourierField::sine(band, 2, 0.01);

    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.steps = 1000;
    cfg.projectMean = false;
    const Trajectory traj = integrate(Model::h10(), {u0, 0.0, 0.0}, cfg);
    const std::vector<FourierField> uR = fields(traj);

    const Factorization f = factorizeSR(uR, cfg.dt);
    const double residual = geodesicResidual(Model::h10(), f.uSR, f.lambda, 0.0, cfg.dt);
    c.add("Riemannian input residual", f.riemannResidual, 1e-6);
    c.add("u_t = 3uu' + 2 lambda u' residual of u_sR", residual, 1e-6);

    const std::vector<DiffeoGrid> gR = flowFromLog(uR, cfg.dt, grid);
    const std::vector<DiffeoGrid> gSR = flowFromLog(f.uSR, cfg.dt, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < gR.size(); i += 50) {
      const double t = cfg.dt * static_cast<double>(i);
      const DiffeoGrid back = compose(gR[i], DiffeoGrid::rotation(grid, -f.lambda * t));
      worst = std::max(worst, supDistance(back, gSR[i]));
    }
    c.add("gamma_R(t) o rot(-lambda t) vs gamma_sR(t)", worst, 1e-5);
  });
}

Criterion dispersion(const CheckOptions& opts) {
  return runCriterion(5, "vir10 linear dispersion relation", [&](Criterion& c) {
    (void)opts;
    const CocycleParams cp{0.5, 0.1};
    const double l1 = 0.5, l2 = 1.0;
    const Model model = Model::vir10(cp);
    for (int n = 1; n <= 3; ++n) {
      const int band = 16;
      IntegratorConfig cfg;
      cfg.dt = 1e-3;
      cfg.steps = 2000;
      cfg.sampleEvery = 10;
      const GeodesicState s0{FourierField::cosine(band, n, 1e-4), l1, l2};
      cfg.scheme = autoScheme(model, s0, cfg.dt);
      const Trajectory traj = integrate(model, s0, cfg);

      // least-squares slope of the unwrapped phase of c_n(t)
      std::vector<double> phase;
      double prev = 0.0, offset = 0.0;
      for (const auto& s : traj.states) {
        const double p = std::arg(s.u.coeff(n));
        if (!phase.empty()) {
          if (p - prev > std::numbers::pi) offset -= 2.0 * std::numbers::pi;
          if (p - prev < -std::numbers::pi) offset += 2.0 * std::numbers::pi;
        }
        prev = p;
        phase.push_back(p + offset);
      }
      double st = 0, sp = 0, stt = 0, stp = 0;
      const double m = static_cast<double>(phase.size());
      for (std::size_t i = 0; i < phase.size(); ++i) {
        const double t = traj.times[i];
        st += t;
        sp += phase[i];
        stt += t * t;
        stp += t * phase[i];
      }
      const double slope = (m * stp - st * sp) / (m * stt - st * st);
      // c_n ~ e^{-i omega t}
      const double measured = -slope;
      const double expected = -n * (2.0 * l1 - l2 * cp.mu) + l2 * cp.nu * n * n * n;
      c.add("n = " + std::to_string(n) + " modal frequency (relative)",
            std::abs(measured - expected) / std::abs(expected), 1e-3);
    }
  });
}

Criterion tauInversion(const CheckOptions& opts) {
  return runCriterion(7, "tau_u inversion residual", [&](Criterion& c) {
    Rng rng = streamFor(opts, 7);
    const int band = 64;
    const int grid = 256;
    const double dt = 1e-3;
    const int steps = 400;
    double worst = 0.0;
    for (int trial = 0; trial < 2; ++trial) {
      const FourierField u0 = randomField(rng, band, 3, 0.3);
      const FourierField u1 = randomField(rng, band, 3, 0.3);
      const FourierField y0 = randomField(rng, band, 4, 1.0, true);
      const FourierField y1 = randomField(rng, band, 4, 1.0, true);
      std::vector<FourierField> u, y;
      for (int i = 0; i <= steps; ++i) {
        const double t = dt * i;
        u.push_back(u0 + std::sin(3.0 * t) * u1);
        y.push_back(y0 + std::cos(2.0 * t) * y1);
      }
      const std::vector<DiffeoGrid> gamma = flowFromLog(u, dt, grid);
      const std::vector<FourierField> x = invertTau(gamma, y, dt);
      worst = std::max(worst, tauResidual(u, x, y, dt));
    }
    c.add("sup |x_t + [u, x] - y|", worst, 1e-5);
  });
}

}  // namespace

SuiteReport runGeodesicChecks(const CheckOptions& opts) {
  detail::Stopwatch clock;
  SuiteReport r{"geodesic", {}, 0.0};
  r.criteria.push_back(conservation(opts));
  r.criteria.push_back(factorization(opts));
  r.criteria.push_back(dispersion(opts));
  r.criteria.push_back(tauInversion(opts));
  r.seconds = clock.seconds();
  return r;
}

}  // namespace srgeo::checks
