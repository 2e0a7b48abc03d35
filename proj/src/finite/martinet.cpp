#include "srgeo/finite/martinet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "srgeo/core/error.hpp"

namespace srgeo {
namespace {

double simpson(const std::vector<double>& f, double h) {
  const std::size_t n = f.size() - 1;
  double s = f.front() + f.back();
  for (std::size_t i = 1; i < n; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
  return s * h / 3.0;
}

}  // namespace

MartinetVariation martinetVariation(const ScalarFn& v, double s, int samples, const ScalarFn& u,
                                    const ScalarFn& du) {
  if (!v) throw InputError("martinetVariation: missing profile v");
  if (std::abs(v(0.0)) > 1e-12 || std::abs(v(1.0)) > 1e-12) {
    throw InputError("martinetVariation: v must vanish at t = 0 and t = 1");
  }
  if (u && (std::abs(u(0.0)) > 1e-12 || std::abs(u(1.0)) > 1e-12)) {
    throw InputError("martinetVariation: u must vanish at t = 0 and t = 1");
  }
  if (u && !du) throw InputError("martinetVariation: u needs its derivative");
  const int n = std::max(2, samples + (samples % 2));
  const double h = 1.0 / n;

  std::vector<double> zRate(n + 1), vsq(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double t = i * h;
    const double y = s * v(t);
    const double xdot = 1.0 + (du ? s * du(t) : 0.0);
    zRate[i] = -0.5 * y * y * xdot;
    vsq[i] = v(t) * v(t);
  }
  MartinetVariation out;
  out.endpointZ = simpson(zRate, h);
  out.ratio = s != 0.0 ? out.endpointZ / (s * s) : 0.0;
  out.leadingTerm = -0.5 * simpson(vsq, h);

  // Along the abnormal line y = 0, x' = 1, so the variational equation
  // reduces to w' = 0: the z-component w = d/ds z^s at s = 0 must vanish.
  // Estimate w by a central difference in s of the integrated curve.
  const double hs = 1e-4;
  double zp = 0.0, zm = 0.0, wPrev = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double t0 = (i - 1) * h, t1 = i * h, tm = t0 + 0.5 * h;
    auto rate = [&](double ss, double t) {
      const double y = ss * v(t);
      return -0.5 * y * y * (1.0 + (du ? ss * du(t) : 0.0));
    };
    zp += h / 6.0 * (rate(hs, t0) + 4.0 * rate(hs, tm) + rate(hs, t1));
    zm += h / 6.0 * (rate(-hs, t0) + 4.0 * rate(-hs, tm) + rate(-hs, t1));
    const double w = (zp - zm) / (2.0 * hs);
    out.fieldW = std::max(out.fieldW, std::abs(w));
    out.fieldResidual = std::max(out.fieldResidual, std::abs((w - wPrev) / h));
    wPrev = w;
  }
  return out;
}

ScalarFn namedProfile(const std::string& name) {
  if (name == "sin_pi") return [](double t) { return std::sin(std::numbers::pi * t); };
  if (name == "t1mt") return [](double t) { return t * (1.0 - t); };
  if (name == "zero") return [](double) { return 0.0; };
  throw InputError("unknown profile '" + name + "' (expected sin_pi, t1mt or zero)");
}

}  // namespace srgeo
