#include <cmath>
#include <numbers>

#include "srgeo/checks/checks.hpp"

namespace srgeo::checks {

FourierField randomField(Rng& rng, int bandLimit, int degree, double amplitude, bool withMean) {
  FourierField f(bandLimit);
  if (withMean) f.setCoeff(0, amplitude * rng.normal());
  for (int k = 1; k <= std::min(degree, bandLimit); ++k) {
    const double scale = amplitude / (static_cast<double>(k) * k);
    f.setCoeff(k, {scale * rng.normal(), scale * rng.normal()});
  }
  return f;
}

DiffeoGrid randomDiffeo(Rng& rng, int gridSize, int degree, double maxSlope) {
  std::vector<double> a(degree), b(degree);
  double slope = 0.0;
  for (int k = 1; k <= degree; ++k) {
    a[k - 1] = rng.uniform(-1.0, 1.0);
    b[k - 1] = rng.uniform(-1.0, 1.0);
    slope += k * (std::abs(a[k - 1]) + std::abs(b[k - 1]));
  }
  const double scale = rng.uniform(0.3, 1.0) * maxSlope / slope;
  const double shift = rng.uniform(-std::numbers::pi, std::numbers::pi);
  return DiffeoGrid::fromMap(gridSize, [&](double th) {
    double d = shift;
    for (int k = 1; k <= degree; ++k) {
      d += scale * (a[k - 1] * std::cos(k * th) + b[k - 1] * std::sin(k * th));
    }
    return th + d;
  });
}

CoverElement randomCover(Rng& rng, double maxS, double maxW) {
  return {rng.uniform(-maxS, maxS), {rng.uniform(-maxW, maxW), rng.uniform(-maxW, maxW)}};
}

}  // namespace srgeo::checks
