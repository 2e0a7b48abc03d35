#include <algorithm>
#include <cmath>
#include <numbers>

#include "common.hpp"
#include "srgeo/oracles/oracles.hpp"
#include "srgeo/su11/embed.hpp"
#include "srgeo/su11/steering.hpp"

namespace srgeo::checks {

namespace {

using detail::runCriterion;
using detail::streamFor;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

oracles::Mat2 toOracle(const Su11Matrix& m) { return m.entries(); }

Su11Vector randomVector(Rng& rng) {
  return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
}

// Elliptic vector (negative Lorentz norm) so that the lift winds.
Su11Vector ellipticVector(Rng& rng) {
  const double a1 = rng.uniform(-0.6, 0.6), a2 = rng.uniform(-0.6, 0.6);
  const double a3 = (rng.uniform() < 0.5 ? -1.0 : 1.0) *
                    (std::hypot(a1, a2) + rng.uniform(0.2, 1.0));
  return {a1, a2, a3};
}

Criterion su11Suite(const CheckOptions& opts) {
  return runCriterion(6, "SU(1,1) exponentials, cover and f_n embeddings", [&](Criterion& c) {
    Rng rng = streamFor(opts, 6);
    const BranchRule rule = opts.branchRule;

    double series = 0.0;
    std::vector<Su11Vector> samples;
    for (int i = 0; i < 60; ++i) samples.push_back(randomVector(rng));
    samples.push_back({1.0, 0.0, 1.0});   // null
    samples.push_back({0.0, 0.6, -0.6});  // null
    samples.push_back({0.0, 0.0, 0.0});
    for (const auto& a : samples) {
      const double t = rng.uniform(-3.0, 3.0);
      const auto ref = oracles::expm2(oracles::su11Generator(a.a1, a.a2, a.a3, t));
      series = std::max(series, oracles::maxEntryDistance(toOracle(expMatrix(a, t)), ref));
    }
    c.add("closed-form exponential vs series expm", series, 1e-12);

    double project = 0.0, ceilDiff = 0.0, jump = 0.0, subgroup = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Su11Vector a = i % 2 == 0 ? ellipticVector(rng) : randomVector(rng);
      for (int step = 0; step <= 400; ++step) {
        // long times so that several branch points are crossed
        const double t = -20.0 + 0.1 * step;
        const CoverElement g = expCover(a, t, rule);
        project = std::max(project, maxDistance(coverProject(g), expMatrix(a, t)));
        ceilDiff =
            std::max(ceilDiff, std::abs(g.s - oracles::lorentzTCeil(a.a1, a.a2, a.a3, t / 2.0)));
        const CoverElement next = expCover(a, t + 1e-3, rule);
        jump = std::max(jump, std::abs(next.s - g.s));
      }
      const double t = rng.uniform(-4.0, 4.0), s = rng.uniform(-4.0, 4.0);
      const CoverElement lhs = expCover(a, t + s, rule);
      const CoverElement rhs = coverMul(expCover(a, t, rule), expCover(a, s, rule));
      subgroup = std::max({subgroup, std::abs(lhs.s - rhs.s), std::abs(lhs.w - rhs.w)});
    }
    c.add("coverProject o expCover vs expMatrix", project, 1e-10);
    c.add("expCover lift angle vs ceiling-branch oracle", ceilDiff, 1e-10);
    c.add("expCover continuity: max lift jump over dt = 1e-3", jump, 0.05);
    c.add("one-parameter subgroup law in the cover", subgroup, 1e-11);

    double hom = 0.0;
    for (int i = 0; i < 50; ++i) {
      const CoverElement g1 = randomCover(rng), g2 = randomCover(rng);
      const Su11Matrix lhs = coverProject(coverMul(g1, g2));
      const Su11Matrix rhs = coverProject(g1) * coverProject(g2);
      hom = std::max(hom, maxDistance(lhs, rhs));
    }
    c.add("cover projection homomorphism", hom, 1e-12);

    double fnHom = 0.0;
    for (int n = 1; n <= 3; ++n) {
      for (int i = 0; i < 5; ++i) {
        const CoverElement g1 = randomCover(rng), g2 = randomCover(rng);
        const CoverElement g12 = coverMul(g1, g2);
        for (int j = 0; j < 1024; ++j) {
          const double th = kTwoPi * j / 1024;
          const double lhs = embedFnAt(n, g12, th);
          const double rhs = embedFnAt(n, g1, embedFnAt(n, g2, th));
          fnHom = std::max(fnHom, std::abs(lhs - rhs));
        }
      }
    }
    c.add("f_n homomorphism on 1024 nodes", fnHom, 1e-9);

    double diff = 0.0;
    const double h = 1e-5;
    for (int n = 1; n <= 3; ++n) {
      for (int j = 0; j < 64; ++j) {
        const double th = kTwoPi * j / 64;
        const auto fd = [&](auto element) {
          return (embedFnAt(n, element(h), th) - embedFnAt(n, element(-h), th)) / (2.0 * h);
        };
        const double ds = fd([](double t) { return CoverElement{t, {0.0, 0.0}}; });
        const double dwr = fd([](double t) { return CoverElement{0.0, {t, 0.0}}; });
        const double dwi = fd([](double t) { return CoverElement{0.0, {0.0, t}}; });
        diff = std::max({diff, std::abs(ds - 2.0 / n),
                         std::abs(dwr - 2.0 / n * std::cos(n * th)),
                         std::abs(dwi + 2.0 / n * std::sin(n * th))});
      }
    }
    c.add("differentials of f_n at the identity", diff, 1e-7);

    double flow = 0.0;
    const auto flowError = [&](int n, double a1, double a2, double a3, double t) {
      const int grid = 256;
      const std::vector<double> v = expDiffHn(n, a1, a2, a3, t, grid).values();
      double e = 0.0;
      for (int j = 0; j < grid; ++j) {
        const double th = kTwoPi * j / grid;
        e = std::max(e, std::abs(v[j] - oracles::characteristicsFlow(n, a1, a2, a3, t, th)));
      }
      return e;
    };
    flow = flowError(1, 1.0, 0.5, 0.2, 0.4);
    for (int i = 0; i < 6; ++i) {
      flow = std::max(flow, flowError(1 + i % 3, rng.uniform(-1, 1), rng.uniform(-1, 1),
                                      rng.uniform(-1, 1), rng.uniform(0.0, 1.0)));
    }
    c.add("expDiffHn vs characteristics flow", flow, 1e-6);
  });
}

// Endpoint of a plan by composing characteristics flows of its stages.
double planEndpointByCharacteristics(const SteeringPlan& plan, double theta) {
  double th = theta;
  const auto& st = plan.stages();
  for (auto it = st.rbegin(); it != st.rend(); ++it) {
    th = oracles::characteristicsFlow(it->subgroup, it->kCoeff, it->pCoeff, 0.0, 1.0, th, 4000);
  }
  return th;
}

Criterion controllability(const CheckOptions& opts) {
  return runCriterion(9, "controllability: rotation and centre steering", [&](Criterion& c) {
    Rng rng = streamFor(opts, 9);
    const RotationSteering rs = steerToRotation(0.3, 1e-4);
    c.add("steerToRotation(0.3) endpoint error", rs.endpointError, 1e-4);

    double oracle = 0.0;
    for (int j = 0; j < 64; ++j) {
      const double th = kTwoPi * j / 64;
      oracle = std::max(oracle, std::abs(planEndpointByCharacteristics(rs.plan, th) - th - 0.3));
    }
    c.add("endpoint by composed characteristics flows", oracle, 1e-4);

    double analytic = 0.0, junction = 0.0;
    const double total = rs.plan.totalTime();
    for (int i = 0; i <= 400; ++i) {
      const double t = total * i / 400.0;
      analytic = std::max(analytic, std::abs(rs.plan.logDerivative(t, 4).coeff(0)));
    }
    for (int k = 0; k <= static_cast<int>(rs.plan.stages().size()); ++k) {
      junction = std::max(junction, rs.plan.logDerivative(static_cast<double>(k), 4).norm());
    }
    c.add("p0-component of the log derivative (analytic)", analytic, 1e-10);
    c.add("p0-component of the log derivative (finite differences)",
          measureHorizontality(rs.plan, 6, 256), 1e-10);
    c.add("velocity at stage junctions", junction, 1e-12);

    for (const CocycleParams cp : {CocycleParams{0.0, 1.0}, CocycleParams{1.0, 1.0}}) {
      const std::string tag = "(mu,nu)=(" + std::to_string(static_cast<int>(cp.mu)) + "," +
                              std::to_string(static_cast<int>(cp.nu)) + ") ";
      double det = 0.0, trip = 0.0, hand = 0.0;
      for (int i = 0; i < 5; ++i) {
        const double b0 = rng.uniform(-0.5, 0.5), b = rng.uniform(-0.5, 0.5);
        const CenterSteering cs = steerVirasoroCenter(b0, b, cp, CentralSlopes::paper, 1e-8);
        det = std::max(det, std::abs(cs.determinant - 3.0 * cp.nu));
        const double r1 = cs.r1, r2 = cs.r2;
        trip = std::max({trip, cs.roundTrip, std::abs(r1 + r2 - b0),
                         std::abs(r1 * (cp.nu - cp.mu) + r2 * (4.0 * cp.nu - cp.mu) - b)});
        if (cp.mu == 0.0) {
          hand = std::max({hand, std::abs(r1 - (4.0 * b0 - b) / 3.0),
                           std::abs(r2 - (b - b0) / 3.0)});
        }
      }
      c.add(tag + "determinant - 3 nu", det, 1e-15);
      c.add(tag + "linear system round-trip", trip, 1e-12);
      if (cp.mu == 0.0) c.add(tag + "hand solution", hand, 1e-12);
    }
  });
}

}  // namespace

SuiteReport runSu11Checks(const CheckOptions& opts) {
  detail::Stopwatch clock;
  SuiteReport r{"su11", {}, 0.0};
  r.criteria.push_back(su11Suite(opts));
  r.criteria.push_back(controllability(opts));
  r.seconds = clock.seconds();
  return r;
}

}  // namespace srgeo::checks
