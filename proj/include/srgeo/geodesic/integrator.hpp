#pragma once

#include <functional>
#include <string>
#include <vector>

#include "srgeo/geodesic/models.hpp"

namespace srgeo {

enum class Scheme { rk4, ifrk4 };

struct IntegratorConfig {
  double dt = 1e-3;
  int steps = 1000;
  Scheme scheme = Scheme::rk4;
  /// Keep every `sampleEvery`-th state in the trajectory (first and last are
  /// always kept).
  int sampleEvery = 1;
  /// Project the mean of u to zero after each step. Off for Riemannian runs
  /// whose velocity has a rotational part.
  bool projectMean = true;
  /// Warn when dt * N * max|u| exceeds this.
  double cflLimit = 0.5;
};

struct StepDiagnostics {
  double maxEnergyDrift = 0.0;  // max_t |E(t) - E(0)| / E(0)  (absolute if E(0) = 0)
  double maxAbsMean = 0.0;      // max_t |mean u(t)|, before projection
  double maxLambdaRate = 0.0;   // max_t |mean of the un-inverted force|
};

struct Trajectory {
  std::vector<double> times;
  std::vector<GeodesicState> states;
  std::vector<double> energies;
  StepDiagnostics diagnostics;
  std::vector<std::string> warnings;
};

/// Linear stiffness max_k |linearSymbol(k)| * dt; large values call for ifrk4.
double linearStiffness(const Model& model, const GeodesicState& state, double dt);

/// Time-steps the model from state0. RK4 integrates the full RHS; IFRK4
/// (Lawson) integrates the constant-coefficient lambda terms exactly and
/// the nonlinearity with RK4. Throws DivergenceError on non-finite values.
Trajectory integrate(const Model& model, const GeodesicState& state0, const IntegratorConfig& cfg);

struct PartialRun {
  Trajectory trajectory;  // everything recorded before a divergence
  bool diverged = false;
  double lastValidTime = 0.0;
  std::string message;
};

/// Like integrate, but a divergence ends the run instead of discarding it.
PartialRun integratePartial(const Model& model, const GeodesicState& state0,
                            const IntegratorConfig& cfg);

}  // namespace srgeo
