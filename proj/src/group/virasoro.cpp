#include "srgeo/group/virasoro.hpp"

#include <cmath>

#include "srgeo/core/error.hpp"
#include "srgeo/simd/kernels.hpp"

namespace srgeo {
namespace {

// (1/4pi) int f dtheta by the trapezoid rule on M nodes
double quarterPiMean(std::span<const double> f) {
  return simd::sum(f) / (2.0 * static_cast<double>(f.size()));
}

}  // namespace

double meanDisplacementFunctional(const DiffeoGrid& phi) {
  return quarterPiMean(phi.displacement());
}

double cocycleA(const DiffeoGrid& phi1, const DiffeoGrid& phi2) {
  const DiffeoGrid c = compose(phi1, phi2);
  std::vector<double> f(static_cast<std::size_t>(c.size()));
  for (int j = 0; j < c.size(); ++j) {
    f[j] = -c.displacement()[j] + phi1.displacement()[j] + phi2.displacement()[j];
  }
  return quarterPiMean(f);
}

double cocycleB(const DiffeoGrid& phi1, const DiffeoGrid& phi2) {
  if (phi1.size() != phi2.size()) throw DimensionError("cocycleB: grid sizes differ");
  const int m = phi2.size();
  const std::vector<double> v2 = phi2.values();
  const std::vector<double> d2 = phi2.derivative();
  const std::vector<double> dd2 = phi2.secondDerivative();
  std::vector<double> d1(v2.size()), unused(v2.size());
  phi1.evaluate(v2, unused, d1);
  std::vector<double> f(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    // chain rule: (phi1 o phi2)' = phi1'(phi2) phi2'
    f[j] = std::log(d1[j] * d2[j]) * dd2[j] / d2[j];
  }
  return quarterPiMean(f);
}

double groupCocycle(const CocycleParams& params, const DiffeoGrid& phi1,
                    const DiffeoGrid& phi2) {
  double c = 0.0;
  if (params.mu != 0.0) c += params.mu * cocycleA(phi1, phi2);
  if (params.nu != 0.0) c += params.nu * cocycleB(phi1, phi2);
  return c;
}

VirasoroElement virMultiply(const VirasoroElement& g1, const VirasoroElement& g2,
                            const CocycleParams& params) {
  return {compose(g1.phi, g2.phi), g1.b + g2.b + groupCocycle(params, g1.phi, g2.phi)};
}

VirasoroElement virInverse(const VirasoroElement& g) { return {invert(g.phi), -g.b}; }

}  // namespace srgeo
