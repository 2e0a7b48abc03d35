#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "srgeo/finite/frame.hpp"
#include "srgeo/finite/martinet.hpp"
#include "srgeo/oracles/oracles.hpp"

namespace srgeo::checks {

namespace {

using detail::runCriterion;
using detail::streamFor;

VectorXd randomVector(Rng& rng, int n, double amp) {
  VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.uniform(-amp, amp);
  return v;
}

Criterion martinetAndNormal(const CheckOptions& opts) {
  return runCriterion(8, "Martinet semi-rigidity and normal geodesics", [&](Criterion& c) {
    Rng rng = streamFor(opts, 8);
    for (const auto& [name, integral] :
         {std::pair<std::string, double>{"sin_pi", 0.5}, {"t1mt", 1.0 / 30.0}}) {
      const MartinetVariation mv = martinetVariation(namedProfile(name), 1e-2);
      const double expected = -0.5 * integral;
      c.add("z(1)/s^2 for v = " + name + " (relative to -(1/2) int v^2)",
            std::abs(mv.ratio - expected) / std::abs(expected), 0.01);
    }

    const FrameSR heis = heisenbergFrame();
    const FrameSR mart = martinetFrame();
    double drift = 0.0, vertical = 0.0, closed = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (const FrameSR* sys : {&heis, &mart}) {
        const CotangentState s0{randomVector(rng, 3, 0.5), randomVector(rng, 3, 1.0)};
        const NormalTrajectory tr = srNormalFlow(*sys, s0, 1e-3, 1000);
        drift = std::max(drift, tr.maxHamiltonianDrift);
        vertical = std::max(vertical, tr.maxVertical);
      }
      const VectorXd p = randomVector(rng, 3, 1.0);
      const CotangentState s0{VectorXd::Zero(3), p};
      const NormalTrajectory tr = srNormalFlow(heis, s0, 1e-3, 1000);
      const auto ref = oracles::heisenbergEndpoint(p(0), p(1), p(2), 1.0);
      const VectorXd& m = tr.states.back().m;
      for (int k = 0; k < 3; ++k) closed = std::max(closed, std::abs(m(k) - ref[k]));
    }
    c.add("H_sR drift over unit time (relative)", drift, 1e-8);
    c.add("vertical velocity of normal flows", vertical, 1e-8);
    c.add("Heisenberg geodesic vs closed form", closed, 1e-6);
  });
}

}  // namespace

SuiteReport runFiniteChecks(const CheckOptions& opts) {
  detail::Stopwatch clock;
  SuiteReport r{"finite", {}, 0.0};
  r.criteria.push_back(martinetAndNormal(opts));
  r.seconds = clock.seconds();
  return r;
}

}  // namespace srgeo::checks
