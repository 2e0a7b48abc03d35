#include "srgeo/group/diffeo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "srgeo/core/error.hpp"

namespace srgeo {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool allEqual(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

}  // namespace

DiffeoGrid::DiffeoGrid(std::vector<double> displacement) : disp_(std::move(displacement)) {
  if (disp_.size() < 2) throw DimensionError("DiffeoGrid needs at least two nodes");
  for (double d : disp_) {
    if (!std::isfinite(d)) throw GeometryError("non-finite displacement");
  }
  rotation_ = allEqual(disp_);
  field_ = FourierField::fromSamples(disp_, size() / 2);
  check();
}

void DiffeoGrid::check() const {
  const int m = size();
  const double h = kTwoPi / m;
  for (int j = 0; j < m; ++j) {
    const double next = j + 1 < m ? disp_[j + 1] : disp_[0];
    if (!(h + next - disp_[j] > 0.0)) {
      throw GeometryError("diffeomorphism not monotone between nodes " + std::to_string(j) +
                          " and " + std::to_string((j + 1) % m));
    }
  }
}

DiffeoGrid DiffeoGrid::identity(int gridSize) {
  return DiffeoGrid(std::vector<double>(static_cast<std::size_t>(gridSize), 0.0));
}

DiffeoGrid DiffeoGrid::rotation(int gridSize, double angle) {
  return DiffeoGrid(std::vector<double>(static_cast<std::size_t>(gridSize), angle));
}

DiffeoGrid DiffeoGrid::fromMap(int gridSize, const std::function<double(double)>& phi) {
  std::vector<double> d(static_cast<std::size_t>(gridSize));
  for (int j = 0; j < gridSize; ++j) {
    const double th = kTwoPi * j / gridSize;
    d[j] = phi(th) - th;
  }
  return DiffeoGrid(std::move(d));
}

double DiffeoGrid::node(int j) const { return kTwoPi * j / size(); }

std::vector<double> DiffeoGrid::values() const {
  std::vector<double> v(disp_);
  for (int j = 0; j < size(); ++j) v[j] += node(j);
  return v;
}

double DiffeoGrid::operator()(double theta) const {
  if (rotation_) return theta + disp_.front();
  return theta + field_(theta);
}

void DiffeoGrid::evaluate(std::span<const double> theta, std::span<double> value,
                          std::span<double> deriv) const {
  if (rotation_) {
    for (std::size_t i = 0; i < theta.size(); ++i) value[i] = theta[i] + disp_.front();
    for (double& d : deriv) d = 1.0;
    return;
  }
  field_.evaluate(theta, value, deriv);
  for (std::size_t i = 0; i < theta.size(); ++i) value[i] += theta[i];
  for (double& d : deriv) d += 1.0;
}

std::vector<double> DiffeoGrid::derivative() const {
  if (rotation_) return std::vector<double>(disp_.size(), 1.0);
  std::vector<double> d = field_.derivative().samples(size());
  for (double& v : d) v += 1.0;
  return d;
}

std::vector<double> DiffeoGrid::secondDerivative() const {
  if (rotation_) return std::vector<double>(disp_.size(), 0.0);
  return field_.derivative(2).samples(size());
}

DiffeoGrid compose(const DiffeoGrid& f, const DiffeoGrid& g) {
  if (f.size() != g.size()) throw DimensionError("compose: grid sizes differ");
  std::vector<double> d(g.displacement().begin(), g.displacement().end());
  if (f.isRotation()) {
    for (double& v : d) v += f.displacement()[0];
    return DiffeoGrid(std::move(d));
  }
  const std::vector<double> gv = g.values();
  std::vector<double> fd(gv.size());
  f.displacementField().evaluate(gv, fd);
  for (std::size_t j = 0; j < d.size(); ++j) d[j] += fd[j];
  return DiffeoGrid(std::move(d));
}

DiffeoGrid invert(const DiffeoGrid& f) {
  const int m = f.size();
  if (f.isRotation()) return DiffeoGrid::rotation(m, -f.displacement()[0]);
  const auto disp = f.displacement();
  const auto [lo, hi] = std::minmax_element(disp.begin(), disp.end());
  // the interpolant may overshoot the sampled extremes slightly
  const double margin = 0.5 * (*hi - *lo) + kTwoPi / m;
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double target = f.node(j);
    double a = target - *hi - margin;
    double b = target - *lo + margin;
    double fa = 0.0, fb = 0.0;
    f.evaluate({&a, 1}, {&fa, 1});
    f.evaluate({&b, 1}, {&fb, 1});
    if (!(fa <= target && fb >= target)) {
      throw GeometryError("invert: cannot bracket preimage of node " + std::to_string(j));
    }
    double x = target - disp[j];
    x = std::clamp(x, a, b);
    for (int it = 0; it < 100; ++it) {
      double fx = 0.0, dfx = 0.0;
      f.evaluate({&x, 1}, {&fx, 1}, {&dfx, 1});
      const double r = fx - target;
      if (r > 0.0) b = x; else a = x;
      if (std::abs(r) <= 1e-15 * (1.0 + std::abs(target))) break;
      double nx = dfx > 0.0 ? x - r / dfx : 0.5 * (a + b);
      if (!(nx > a && nx < b)) nx = 0.5 * (a + b);
      if (std::abs(nx - x) <= 1e-16 * (1.0 + std::abs(x))) {
        x = nx;
        break;
      }
      x = nx;
    }
    out[j] = x - target;
  }
  return DiffeoGrid(std::move(out));
}

double supDistance(const DiffeoGrid& f, const DiffeoGrid& g) {
  if (f.size() != g.size()) throw DimensionError("supDistance: grid sizes differ");
  double m = 0.0;
  for (int j = 0; j < f.size(); ++j) {
    m = std::max(m, std::abs(f.displacement()[j] - g.displacement()[j]));
  }
  return m;
}

FourierField adAction(const DiffeoGrid& phi, const FourierField& x, int bandLimit) {
  if (phi.isRotation()) return rotate(x, phi.displacement()[0]).resized(bandLimit);
  const DiffeoGrid inv = invert(phi);
  const std::vector<double> psi = inv.values();
  std::vector<double> dphi(psi.size()), unused(psi.size()), xv(psi.size());
  phi.evaluate(psi, unused, dphi);
  x.evaluate(psi, xv);
  for (std::size_t j = 0; j < xv.size(); ++j) xv[j] *= dphi[j];
  return FourierField::fromSamples(xv, bandLimit);
}

FourierField adAction(const DiffeoGrid& phi, const FourierField& x) {
  return adAction(phi, x, x.bandLimit());
}

FourierField adActionInverse(const DiffeoGrid& phi, const FourierField& x, int bandLimit) {
  if (phi.isRotation()) return rotate(x, -phi.displacement()[0]).resized(bandLimit);
  const std::vector<double> v = phi.values();
  const std::vector<double> dphi = phi.derivative();
  std::vector<double> xv(v.size());
  x.evaluate(v, xv);
  for (std::size_t j = 0; j < xv.size(); ++j) xv[j] /= dphi[j];
  return FourierField::fromSamples(xv, bandLimit);
}

FourierField rotate(const FourierField& x, double angle) {
  FourierField r(x.bandLimit());
  for (int k = 0; k <= x.bandLimit(); ++k) {
    r.setCoeff(k, x.coeff(k) * std::polar(1.0, -k * angle));
  }
  return r;
}

}  // namespace srgeo
