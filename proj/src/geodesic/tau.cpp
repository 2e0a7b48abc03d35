#include "srgeo/geodesic/tau.hpp"

#include <algorithm>
#include <cmath>

#include "srgeo/core/error.hpp"
#include "srgeo/core/timegrid.hpp"
#include "srgeo/fourier/algebra.hpp"

namespace srgeo {
namespace {

// (phi' y) o phi^{-1} at the nodes
std::vector<double> adSamples(const DiffeoGrid& phi, const FourierField& y) {
  const std::vector<double> psi = invert(phi).values();
  std::vector<double> val(psi.size()), dphi(psi.size()), yv(psi.size());
  phi.evaluate(psi, val, dphi);
  y.evaluate(psi, yv);
  for (std::size_t j = 0; j < yv.size(); ++j) yv[j] *= dphi[j];
  return yv;
}

}  // namespace

std::vector<FourierField> invertTau(const std::vector<DiffeoGrid>& gamma,
                                    const std::vector<FourierField>& y, double dt) {
  if (gamma.size() != y.size()) throw DimensionError("invertTau: time grids differ");
  if (y.empty()) return {};
  if (supDistance(gamma.front(), DiffeoGrid::identity(gamma.front().size())) > 1e-12) {
    throw InputError("invertTau: gamma(0) must be the identity");
  }
  const int m = gamma.front().size();
  const int band = y.front().bandLimit();
  const std::size_t nt = y.size();

  std::vector<std::vector<double>> pushed(nt);
  for (std::size_t i = 0; i < nt; ++i) pushed[i] = adSamples(gamma[i], y[i]);

  // integrate node by node in time
  std::vector<std::vector<double>> integral(nt, std::vector<double>(static_cast<std::size_t>(m)));
  std::vector<double> column(nt);
  for (int j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < nt; ++i) column[i] = pushed[i][j];
    const std::vector<double> w = cumulativeIntegral(column, dt);
    for (std::size_t i = 0; i < nt; ++i) integral[i][j] = w[i];
  }

  std::vector<FourierField> x;
  x.reserve(nt);
  for (std::size_t i = 0; i < nt; ++i) {
    const FourierField w = FourierField::fromSamples(integral[i], m / 2);
    x.push_back(adActionInverse(gamma[i], w, band));
  }
  return x;
}

double tauResidual(const std::vector<FourierField>& u, const std::vector<FourierField>& x,
                   const std::vector<FourierField>& y, double dt) {
  if (u.size() != x.size() || x.size() != y.size()) {
    throw DimensionError("tauResidual: time grids differ");
  }
  if (x.empty()) return 0.0;
  const int band = x.front().bandLimit();
  const int m = std::max(4 * band, 8);
  std::vector<std::vector<double>> xs;
  xs.reserve(x.size());
  for (const auto& f : x) xs.push_back(f.samples(m));
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::vector<double> xt = timeDerivativeAt(xs, static_cast<int>(i), dt);
    const std::vector<double> br = bracket(u[i].resized(band), x[i]).samples(m);
    const std::vector<double> yv = y[i].resized(band).samples(m);
    for (int j = 0; j < m; ++j) worst = std::max(worst, std::abs(xt[j] + br[j] - yv[j]));
  }
  return worst;
}

}  // namespace srgeo
