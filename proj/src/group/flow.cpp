#include "srgeo/group/flow.hpp"

#include <cmath>
#include <cstdio>

#include "srgeo/core/error.hpp"
#include "srgeo/core/timegrid.hpp"
#include "srgeo/simd/kernels.hpp"

namespace srgeo {
namespace {

// (1 + d') * u at the nodes
std::vector<double> velocity(const std::vector<double>& d, const std::vector<double>& u) {
  const int m = static_cast<int>(d.size());
  std::vector<double> r = FourierField::fromSamples(d, m / 2).derivative().samples(m);
  for (double& v : r) v += 1.0;
  simd::multiply(r, u, r);
  return r;
}

void advance(std::vector<double>& y, const std::vector<double>& k, double h,
             std::vector<double>& out) {
  out = y;
  simd::axpy(h, k, out);
}

}  // namespace

std::vector<DiffeoGrid> flowFromLog(const std::vector<FourierField>& u, double dt, int gridSize) {
  if (u.empty()) return {};
  if (!(dt > 0.0)) throw ParameterError("flowFromLog: dt must be positive");
  if (gridSize < 2 * u.front().bandLimit()) {
    throw DimensionError("flowFromLog: grid too coarse for the band limit");
  }
  std::vector<std::vector<double>> us;
  us.reserve(u.size());
  for (const auto& f : u) us.push_back(f.samples(gridSize));

  std::vector<DiffeoGrid> gamma;
  gamma.reserve(u.size());
  gamma.push_back(DiffeoGrid::identity(gridSize));
  std::vector<double> d(static_cast<std::size_t>(gridSize), 0.0), tmp;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const std::vector<double> umid = midpointValue(us, static_cast<int>(i));
    const auto k1 = velocity(d, us[i]);
    advance(d, k1, dt / 2.0, tmp);
    const auto k2 = velocity(tmp, umid);
    advance(d, k2, dt / 2.0, tmp);
    const auto k3 = velocity(tmp, umid);
    advance(d, k3, dt, tmp);
    const auto k4 = velocity(tmp, us[i + 1]);
    for (std::size_t j = 0; j < d.size(); ++j) {
      d[j] += dt / 6.0 * (k1[j] + 2.0 * (k2[j] + k3[j]) + k4[j]);
    }
    const double t = dt * static_cast<double>(i + 1);
    try {
      gamma.emplace_back(d);
    } catch (const GeometryError& e) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "flow lost monotonicity at t=%.6g: ", t);
      throw DivergenceError(buf + std::string(e.what()), t - dt);
    }
  }
  return gamma;
}

std::vector<FourierField> logDerivative(const std::vector<DiffeoGrid>& gamma, double dt,
                                        int bandLimit) {
  std::vector<std::vector<double>> disp;
  disp.reserve(gamma.size());
  for (const auto& g : gamma) disp.emplace_back(g.displacement().begin(), g.displacement().end());
  std::vector<FourierField> u;
  u.reserve(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    std::vector<double> rate = timeDerivativeAt(disp, static_cast<int>(i), dt);
    const std::vector<double> dphi = gamma[i].derivative();
    for (std::size_t j = 0; j < rate.size(); ++j) rate[j] /= dphi[j];
    u.push_back(FourierField::fromSamples(rate, bandLimit));
  }
  return u;
}

double centralRate(const FourierField& u, const DiffeoGrid& gamma, const CocycleParams& params) {
  const int m = gamma.size();
  const std::vector<double> uv = u.samples(m);
  const std::vector<double> du = u.derivative().samples(m);
  const std::vector<double> g1 = gamma.derivative();
  const std::vector<double> g2 = gamma.secondDerivative();
  double su = 0.0, sug = 0.0, sb = 0.0;
  for (int j = 0; j < m; ++j) {
    su += uv[j];
    sug += uv[j] * g1[j];
    sb += du[j] * g2[j] / g1[j];
  }
  // (1/4pi) int f dtheta = (1/2M) sum_j f_j
  const double c = 1.0 / (2.0 * m);
  return c * (params.mu * su - params.mu * sug - params.nu * sb);
}

std::vector<double> centralLift(const std::vector<FourierField>& u,
                                const std::vector<DiffeoGrid>& gamma, double dt,
                                const CocycleParams& params) {
  if (u.size() != gamma.size()) throw DimensionError("centralLift: time grids differ");
  std::vector<double> rate(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) rate[i] = centralRate(u[i], gamma[i], params);
  return cumulativeIntegral(rate, dt);
}

}  // namespace srgeo
