#include "srgeo/geodesic/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "srgeo/core/error.hpp"

namespace srgeo {
namespace {

using Complex = std::complex<double>;

FourierField scaled(const std::vector<Complex>& factor, const FourierField& x) {
  FourierField r(x.bandLimit());
  for (int k = 0; k <= x.bandLimit(); ++k) r.setCoeff(k, factor[k] * x.coeff(k));
  return r;
}

FourierField axpy(const FourierField& x, double a, const FourierField& y) {
  FourierField r(x);
  r += a * y;
  return r;
}

class Stepper {
 public:
  Stepper(const Model& model, const GeodesicState& s0, const IntegratorConfig& cfg)
      : model_(model), cfg_(cfg), lambda1_(s0.lambda1), lambda2_(s0.lambda2) {
    if (cfg.scheme == Scheme::ifrk4) {
      const int n = s0.u.bandLimit();
      half_.resize(n + 1);
      full_.resize(n + 1);
      for (int k = 0; k <= n; ++k) {
        const Complex sigma = linearSymbol(model, s0, k);
        half_[k] = std::exp(sigma * (cfg.dt / 2.0));
        full_[k] = half_[k] * half_[k];
      }
    }
  }

  FourierField step(const FourierField& u) const {
    return cfg_.scheme == Scheme::rk4 ? rk4(u) : ifrk4(u);
  }

 private:
  GeodesicState at(const FourierField& u, bool withLambda) const {
    return {u, withLambda ? lambda1_ : 0.0, withLambda ? lambda2_ : 0.0};
  }

  FourierField full(const FourierField& u) const { return geodesicRHS(model_, at(u, true)); }
  // every lambda term is linear in u, so the nonlinear part is the RHS at lambda = 0
  FourierField nonlinear(const FourierField& u) const {
    return geodesicRHS(model_, at(u, false));
  }

  FourierField rk4(const FourierField& u) const {
    const double dt = cfg_.dt;
    const FourierField k1 = full(u);
    const FourierField k2 = full(axpy(u, dt / 2.0, k1));
    const FourierField k3 = full(axpy(u, dt / 2.0, k2));
    const FourierField k4 = full(axpy(u, dt, k3));
    FourierField r(u);
    r += (dt / 6.0) * (k1 + 2.0 * (k2 + k3) + k4);
    return r;
  }

  FourierField ifrk4(const FourierField& u) const {
    const double dt = cfg_.dt;
    const FourierField k1 = nonlinear(u);
    const FourierField eu = scaled(half_, u);
    const FourierField k2 = nonlinear(scaled(half_, axpy(u, dt / 2.0, k1)));
    const FourierField k3 = nonlinear(axpy(eu, dt / 2.0, k2));
    const FourierField k4 = nonlinear(axpy(scaled(full_, u), dt, scaled(half_, k3)));
    FourierField r = scaled(full_, u);
    r += (dt / 6.0) * (scaled(full_, k1) + 2.0 * scaled(half_, k2 + k3) + k4);
    return r;
  }

  const Model& model_;
  const IntegratorConfig& cfg_;
  double lambda1_;
  double lambda2_;
  std::vector<Complex> half_;
  std::vector<Complex> full_;
};

double maxAbsValue(const FourierField& u) {
  const auto s = u.samples(std::max(4 * u.bandLimit(), 4));
  double m = 0.0;
  for (double v : s) m = std::max(m, std::abs(v));
  return m;
}

std::string formatWarning(const char* fmt, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

}  // namespace

double linearStiffness(const Model& model, const GeodesicState& state, double dt) {
  double m = 0.0;
  for (int k = 1; k <= state.u.bandLimit(); ++k) {
    m = std::max(m, std::abs(linearSymbol(model, state, k)));
  }
  return m * dt;
}

namespace {

void integrateInto(const Model& model, const GeodesicState& state0, const IntegratorConfig& cfg,
                   Trajectory& traj) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw ParameterError("dt must be positive");
  if (cfg.steps < 0) throw ParameterError("steps must be non-negative");
  if (cfg.sampleEvery < 1) throw ParameterError("sampleEvery must be >= 1");
  model.validateFor(state0.u.bandLimit());
  if (!state0.u.isFinite()) throw InputError("initial field is not finite");

  const int n = state0.u.bandLimit();
  const Stepper stepper(model, state0, cfg);
  FourierField u = state0.u;
  if (cfg.projectMean) u.setCoeff(0, 0.0);
  const double e0 = energy(model, u);
  const double escale = e0 > 0.0 ? e0 : 1.0;
  bool cflWarned = false;

  auto record = [&](double t, const FourierField& f, double e) {
    traj.times.push_back(t);
    traj.states.push_back({f, state0.lambda1, state0.lambda2});
    traj.energies.push_back(e);
  };
  auto observe = [&](const FourierField& f, double t) {
    const double umax = maxAbsValue(f);
    if (!cflWarned && cfg.dt * n * umax > cfg.cflLimit) {
      traj.warnings.push_back(formatWarning(
          "CFL bound exceeded at t=%.6g: dt*N*max|u| = %.3g", t, cfg.dt * n * umax));
      cflWarned = true;
    }
    traj.diagnostics.maxLambdaRate = std::max(
        traj.diagnostics.maxLambdaRate,
        std::abs(lambdaRate(model, {f, state0.lambda1, state0.lambda2})));
  };

  traj.diagnostics.maxAbsMean = cfg.projectMean ? std::abs(mean(u)) : 0.0;
  observe(u, 0.0);
  record(0.0, u, e0);
  double tValid = 0.0;
  for (int i = 1; i <= cfg.steps; ++i) {
    const double t = i * cfg.dt;
    FourierField next = stepper.step(u);
    if (!next.isFinite()) {
      throw DivergenceError(formatWarning("non-finite field at t=%.6g (last valid t=%.6g)", t,
                                          tValid),
                            tValid);
    }
    if (cfg.projectMean) {
      traj.diagnostics.maxAbsMean = std::max(traj.diagnostics.maxAbsMean, std::abs(mean(next)));
      next.setCoeff(0, 0.0);
    }
    u = std::move(next);
    tValid = t;
    const double e = energy(model, u);
    traj.diagnostics.maxEnergyDrift =
        std::max(traj.diagnostics.maxEnergyDrift, std::abs(e - e0) / escale);
    observe(u, t);
    if (i % cfg.sampleEvery == 0 || i == cfg.steps) record(t, u, e);
  }
}

}  // namespace

Trajectory integrate(const Model& model, const GeodesicState& state0,
                     const IntegratorConfig& cfg) {
  Trajectory traj;
  integrateInto(model, state0, cfg, traj);
  return traj;
}

PartialRun integratePartial(const Model& model, const GeodesicState& state0,
                            const IntegratorConfig& cfg) {
  PartialRun run;
  try {
    integrateInto(model, state0, cfg, run.trajectory);
    run.lastValidTime = cfg.dt * cfg.steps;
  } catch (const DivergenceError& e) {
    run.diverged = true;
    run.lastValidTime = e.lastValidTime();
    run.message = e.what();
  }
  return run;
}

}  // namespace srgeo
