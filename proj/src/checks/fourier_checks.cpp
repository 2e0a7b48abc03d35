#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "srgeo/fourier/algebra.hpp"
#include "srgeo/fourier/metrics.hpp"
#include "srgeo/group/virasoro.hpp"

namespace srgeo::checks {

namespace {

using detail::runCriterion;
using detail::streamFor;

double norm(const VirasoroVector& v) { return std::hypot(v.field.norm(), v.central); }

Criterion adjointIdentity(const CheckOptions& opts) {
  return runCriterion(1, "adjoint identity <ad^T_x y, z> = <y, [x, z]>", [&](Criterion& c) {
    Rng rng = streamFor(opts, 1);
    const InnerProduct l2 = InnerProduct::h10();
    const int band = 24;
    double worstL2 = 0.0;
    double worstVir = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const FourierField x = randomField(rng, band, band, 1.0, true);
      const FourierField y = randomField(rng, band, band, 1.0, true);
      const FourierField z = randomField(rng, band, band, 1.0, true);
      const double floor = x.norm() * y.norm() * z.norm();

      const double lhs = l2(adjointAdT(x, y), z);
      const double rhs = l2(y, bracket(x, z));
      worstL2 = std::max(worstL2,
                         std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), floor}));

      const CocycleParams cp{rng.uniform(-1.0, 1.0), rng.uniform(0.1, 1.0)};
      const VirasoroVector xv{x, rng.normal()};
      const VirasoroVector yv{y, rng.normal()};
      const VirasoroVector zv{z, rng.normal()};
      const VirasoroVector ad = adjointAdT(cp, xv, yv);
      const VirasoroVector br = bracket(cp, xv, zv);
      const double vl = l2(ad.field, z) + ad.central * zv.central;
      const double vr = l2(y, br.field) + yv.central * br.central;
      const double vfloor = norm(xv) * norm(yv) * norm(zv);
      worstVir = std::max(worstVir,
                          std::abs(vl - vr) / std::max({std::abs(vl), std::abs(vr), vfloor}));
    }
    c.add("L2 adjoint, relative, 100 triples", worstL2, 1e-9);
    c.add("Virasoro adjoint, relative, 100 triples", worstVir, 1e-9);
  });
}

Criterion cocycleSuite(const CheckOptions& opts) {
  return runCriterion(2, "Jacobi identities and cocycle identities", [&](Criterion& c) {
    Rng rng = streamFor(opts, 2);
    // degree 8 inside band 24: nested brackets are never truncated
    const int band = 24;
    const int degree = 8;
    double jacobiField = 0.0;
    double jacobiVir = 0.0;
    double cocycle = 0.0;
    double omega10 = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const FourierField x = randomField(rng, band, degree, 1.0, true);
      const FourierField y = randomField(rng, band, degree, 1.0, true);
      const FourierField z = randomField(rng, band, degree, 1.0, true);

      const FourierField t1 = bracket(x, bracket(y, z));
      const FourierField t2 = bracket(y, bracket(z, x));
      const FourierField t3 = bracket(z, bracket(x, y));
      const double scale = std::max({t1.norm(), t2.norm(), t3.norm(), 1e-300});
      jacobiField = std::max(jacobiField, (t1 + t2 + t3).norm() / scale);

      const CocycleParams cp{rng.uniform(-1.0, 1.0), rng.uniform(0.1, 1.0)};
      const VirasoroVector xv{x, rng.normal()};
      const VirasoroVector yv{y, rng.normal()};
      const VirasoroVector zv{z, rng.normal()};
      const VirasoroVector v1 = bracket(cp, xv, bracket(cp, yv, zv));
      const VirasoroVector v2 = bracket(cp, yv, bracket(cp, zv, xv));
      const VirasoroVector v3 = bracket(cp, zv, bracket(cp, xv, yv));
      const double vscale = std::max({norm(v1), norm(v2), norm(v3), 1e-300});
      jacobiVir = std::max(jacobiVir, norm(v1 + v2 + v3) / vscale);

      const double w1 = cocycleOmega(cp, bracket(x, y), z);
      const double w2 = cocycleOmega(cp, bracket(y, z), x);
      const double w3 = cocycleOmega(cp, bracket(z, x), y);
      const double wscale = std::max({std::abs(w1), std::abs(w2), std::abs(w3), 1e-300});
      cocycle = std::max(cocycle, std::abs(w1 + w2 + w3) / wscale);

      const double w10 = cocycleOmega(CocycleParams{1.0, 0.0}, x, y);
      const double viaMean = -0.5 * mean(bracket(x, y));
      omega10 = std::max(omega10, std::abs(w10 - viaMean) / (x.norm() * y.norm() * band));
    }
    c.add("Jacobi, vector field bracket (relative)", jacobiField, 1e-10);
    c.add("Jacobi, Virasoro bracket (relative)", jacobiVir, 1e-10);
    c.add("omega 2-cocycle identity (relative)", cocycle, 1e-9);
    c.add("omega_10(x,y) + mean([x,y])/2, round-off scale", omega10, 1e-13);

    double group = 0.0;
    const int grid = 256;
    for (int trial = 0; trial < 10; ++trial) {
      const DiffeoGrid f = randomDiffeo(rng, grid, 3, 0.8);
      const DiffeoGrid g = randomDiffeo(rng, grid, 3, 0.8);
      const DiffeoGrid h = randomDiffeo(rng, grid, 3, 0.8);
      const CocycleParams cp{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      const double lhs = groupCocycle(cp, f, g) + groupCocycle(cp, compose(f, g), h);
      const double rhs = groupCocycle(cp, f, compose(g, h)) + groupCocycle(cp, g, h);
      group = std::max(group, std::abs(lhs - rhs));
    }
    c.add("group cocycle identity for mu A + nu B", group, 1e-7);
  });
}

}  // namespace

SuiteReport runFourierChecks(const CheckOptions& opts) {
  detail::Stopwatch clock;
  SuiteReport r{"fourier", {}, 0.0};
  r.criteria.push_back(adjointIdentity(opts));
  r.criteria.push_back(cocycleSuite(opts));
  r.seconds = clock.seconds();
  return r;
}

}  // namespace srgeo::checks
