#include "srgeo/su11/steering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "srgeo/core/error.hpp"
#include "srgeo/core/timegrid.hpp"

namespace srgeo {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxPiece = 0.5;

double ease(double tau) { return tau - std::sin(kTwoPi * tau) / kTwoPi; }
double easeRate(double tau) { return 1.0 - std::cos(kTwoPi * tau); }

using Params = std::array<double, 4>;
using Residual = std::array<double, 3>;

// exp(a p_n) exp(b k_n) exp(c p_n) exp(d k_n)
std::vector<SteeringStage> loopStages(int n, const Params& q) {
  return {{n, 0.0, q[0], 1.0}, {n, q[1], 0.0, 1.0}, {n, 0.0, q[2], 1.0}, {n, q[3], 0.0, 1.0}};
}

Residual loopResidual(int n, const Params& q, double targetS) {
  CoverElement g;
  for (const auto& st : loopStages(n, q)) g = coverMul(g, st.increment());
  return {g.s - targetS, g.w.real(), g.w.imag()};
}

double norm(const Residual& r) { return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]); }

// Solves the symmetric 3x3 system A y = r by Gaussian elimination with pivoting.
bool solve3(std::array<std::array<double, 3>, 3> a, Residual r, Residual& y) {
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int i = c + 1; i < 3; ++i) {
      if (std::abs(a[i][c]) > std::abs(a[piv][c])) piv = i;
    }
    if (std::abs(a[piv][c]) < 1e-300) return false;
    std::swap(a[c], a[piv]);
    std::swap(r[c], r[piv]);
    for (int i = c + 1; i < 3; ++i) {
      const double f = a[i][c] / a[c][c];
      for (int k = c; k < 3; ++k) a[i][k] -= f * a[c][k];
      r[i] -= f * r[c];
    }
  }
  for (int c = 2; c >= 0; --c) {
    double s = r[c];
    for (int k = c + 1; k < 3; ++k) s -= a[c][k] * y[k];
    y[c] = s / a[c][c];
  }
  return true;
}

struct Polish {
  Params q;
  double residual;
  int iterations;
};

Polish polishLoop(int n, Params q, double targetS) {
  Residual f = loopResidual(n, q, targetS);
  int it = 0;
  for (; it < 60 && norm(f) > 1e-15; ++it) {
    std::array<std::array<double, 4>, 3> jac{};
    for (int k = 0; k < 4; ++k) {
      const double h = 1e-7 * std::max(1.0, std::abs(q[k]));
      Params qp = q, qm = q;
      qp[k] += h;
      qm[k] -= h;
      const Residual fp = loopResidual(n, qp, targetS), fm = loopResidual(n, qm, targetS);
      for (int i = 0; i < 3; ++i) jac[i][k] = (fp[i] - fm[i]) / (2.0 * h);
    }
    // minimum-norm step: dq = -J^T (J J^T)^{-1} f
    std::array<std::array<double, 3>, 3> jjt{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 4; ++k) jjt[i][j] += jac[i][k] * jac[j][k];
      }
    }
    Residual y{};
    if (!solve3(jjt, f, y)) break;
    Params dq{};
    for (int k = 0; k < 4; ++k) {
      for (int i = 0; i < 3; ++i) dq[k] -= jac[i][k] * y[i];
    }
    double step = 1.0;
    bool improved = false;
    for (int ls = 0; ls < 30; ++ls, step *= 0.5) {
      Params trial = q;
      for (int k = 0; k < 4; ++k) trial[k] += step * dq[k];
      const Residual ft = loopResidual(n, trial, targetS);
      if (norm(ft) < norm(f)) {
        q = trial;
        f = ft;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return {q, norm(f), it};
}

double rotationError(const EmbeddedChain& chain, double delta, int nodes) {
  double worst = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double th = kTwoPi * j / nodes;
    worst = std::max(worst, std::abs(chain(th) - th - delta));
  }
  return worst;
}

}  // namespace

CoverElement SteeringStage::increment() const {
  return flowCoverElement(subgroup, kCoeff, pCoeff, 0.0, 1.0);
}

void SteeringPlan::append(const SteeringPlan& other) {
  stages_.insert(stages_.end(), other.stages_.begin(), other.stages_.end());
}

double SteeringPlan::totalTime() const {
  double t = 0.0;
  for (const auto& s : stages_) t += s.duration;
  return t;
}

int SteeringPlan::maxSubgroup() const {
  int n = 0;
  for (const auto& s : stages_) n = std::max(n, s.subgroup);
  return n;
}

EmbeddedChain SteeringPlan::at(double t) const {
  EmbeddedChain chain;
  double start = 0.0;
  for (const auto& s : stages_) {
    if (t >= start + s.duration) {
      chain.append(s.subgroup, s.increment());
    } else {
      if (t > start) {
        const double part = ease((t - start) / s.duration);
        chain.append(s.subgroup, flowCoverElement(s.subgroup, s.kCoeff, s.pCoeff, 0.0, part));
      }
      break;
    }
    start += s.duration;
  }
  return chain;
}

FourierField SteeringPlan::logDerivative(double t, int bandLimit) const {
  FourierField u(bandLimit);
  double start = 0.0;
  for (const auto& s : stages_) {
    if (t >= start && t < start + s.duration) {
      const double rate = easeRate((t - start) / s.duration) / s.duration;
      u += FourierField::sine(bandLimit, s.subgroup, rate * s.kCoeff);
      u += FourierField::cosine(bandLimit, s.subgroup, rate * s.pCoeff);
      break;
    }
    start += s.duration;
  }
  return u;
}

RotationSteering steerToRotation(double delta, double tol, int subgroup) {
  if (subgroup < 1) throw ParameterError("subgroup index must be >= 1");
  if (!std::isfinite(delta)) throw ParameterError("rotation target must be finite");
  RotationSteering out;
  if (delta == 0.0) return out;
  const int pieces = static_cast<int>(std::ceil(std::abs(delta) / kMaxPiece));
  const double piece = delta / pieces;
  // f_n(s, 0) is the rotation by 2s/n
  const double targetS = subgroup * piece / 2.0;
  const double tau = std::sqrt(std::abs(piece) / subgroup);

  Polish best{{}, INFINITY, 0};
  for (double sign : {1.0, -1.0}) {
    const Params seed{tau, sign * tau, -tau, -sign * tau};
    const Polish p = polishLoop(subgroup, seed, targetS);
    if (p.residual < best.residual) best = p;
  }
  std::vector<SteeringStage> stages;
  for (int i = 0; i < pieces; ++i) {
    const auto loop = loopStages(subgroup, best.q);
    stages.insert(stages.end(), loop.begin(), loop.end());
  }
  out.plan = SteeringPlan(std::move(stages));
  out.pieces = pieces;
  out.iterations = best.iterations;
  out.endpointError = rotationError(out.plan.endpoint(), delta, 1024);
  if (!(out.endpointError <= tol)) {
    throw SteeringError("steering to rotation did not reach the target", out.endpointError);
  }
  return out;
}

double measureHorizontality(const SteeringPlan& plan, int samplesPerStage, int gridSize,
                            double h) {
  double worst = 0.0;
  double start = 0.0;
  std::vector<std::vector<double>> series(5, std::vector<double>(gridSize));
  for (const auto& s : plan.stages()) {
    for (int k = 0; k < samplesPerStage; ++k) {
      const double t = start + s.duration * (k + 0.5) / samplesPerStage;
      for (int q = 0; q < 5; ++q) {
        const EmbeddedChain c = plan.at(t + (q - 2) * h);
        for (int j = 0; j < gridSize; ++j) series[q][j] = c(kTwoPi * j / gridSize);
      }
      const std::vector<double> rate = timeDerivativeAt(series, 2, h);
      const EmbeddedChain c = plan.at(t);
      double m = 0.0;
      for (int j = 0; j < gridSize; ++j) m += rate[j] / c.derivative(kTwoPi * j / gridSize);
      worst = std::max(worst, std::abs(m / gridSize));
    }
    start += s.duration;
  }
  return worst;
}

double centralSlope(int n, const CocycleParams& params, CentralSlopes slopes) {
  const double nn = static_cast<double>(n) * n;
  return slopes == CentralSlopes::paper ? nn * params.nu - params.mu
                                        : -(params.mu + params.nu * nn) / 2.0;
}

CenterSteering steerVirasoroCenter(double b0, double b, const CocycleParams& params,
                                   CentralSlopes slopes, double tol) {
  if (params.nu == 0.0) {
    throw ParameterError("centre steering needs nu != 0 (the extension is trivial)");
  }
  CenterSteering out;
  const double s1 = centralSlope(1, params, slopes);
  const double s2 = centralSlope(2, params, slopes);
  out.determinant = s2 - s1;
  // [1 1; s1 s2] (r1, r2) = (b0, b)
  out.r1 = (s2 * b0 - b) / out.determinant;
  out.r2 = (b - s1 * b0) / out.determinant;
  out.roundTrip = std::max(std::abs(out.r1 + out.r2 - b0),
                           std::abs(out.r1 * s1 + out.r2 * s2 - b));
  if (out.r2 != 0.0) out.plan.append(steerToRotation(out.r2, tol, 2).plan);
  if (out.r1 != 0.0) out.plan.append(steerToRotation(out.r1, tol, 1).plan);
  out.endpointError = rotationError(out.plan.endpoint(), out.r1 + out.r2, 1024);
  return out;
}

nlohmann::json planJson(const SteeringPlan& plan) {
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : plan.stages()) {
    const CoverElement g = s.increment();
    stages.push_back({{"subgroup", s.subgroup},
                      {"coverElement", {{"s", g.s}, {"w_re", g.w.real()}, {"w_im", g.w.imag()}}},
                      {"duration", s.duration},
                      {"k", s.kCoeff},
                      {"p", s.pCoeff}});
  }
  return {{"stages", stages}, {"total_time", plan.totalTime()}};
}

}  // namespace srgeo
