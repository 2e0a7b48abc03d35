#include "srgeo/su11/embed.hpp"

#include <cmath>
#include <numbers>

#include "srgeo/core/error.hpp"

namespace srgeo {
namespace {

void requireSubgroup(int n) {
  if (n < 1) throw ParameterError("subgroup index n must be >= 1");
}

}  // namespace

double embedFnAt(int n, const CoverElement& g, double theta) {
  requireSubgroup(n);
  const double r = std::sqrt(std::norm(g.w) + 1.0);
  const Complex z = r + Complex(0.0, 1.0) * std::conj(g.w) * std::polar(1.0, -(n * theta + g.s));
  return theta + (2.0 / n) * (g.s + std::arg(z));
}

double embedFnDerivativeAt(int n, const CoverElement& g, double theta) {
  requireSubgroup(n);
  // Arg(R + q e^{-in theta}) with q = i conj(w) e^{-is}; d/dtheta of the
  // argument is Im(z'/z) with z' = -in q e^{-in theta}
  const double r = std::sqrt(std::norm(g.w) + 1.0);
  const Complex q = Complex(0.0, 1.0) * std::conj(g.w) * std::polar(1.0, -g.s);
  const Complex e = std::polar(1.0, -n * theta);
  const Complex z = r + q * e;
  const Complex dz = Complex(0.0, -static_cast<double>(n)) * q * e;
  return 1.0 + (2.0 / n) * (dz / z).imag();
}

DiffeoGrid embedFn(int n, const CoverElement& g, int gridSize) {
  return DiffeoGrid::fromMap(gridSize, [&](double th) { return embedFnAt(n, g, th); });
}

CoverElement flowCoverElement(int n, double a1, double a2, double a3, double t) {
  requireSubgroup(n);
  return expCover({-a1, -a2, a3}, n * t);
}

DiffeoGrid expDiffHn(int n, double a1, double a2, double a3, double t, int gridSize) {
  return embedFn(n, flowCoverElement(n, a1, a2, a3, t), gridSize);
}

void EmbeddedChain::append(int n, const CoverElement& g) {
  requireSubgroup(n);
  if (!factors_.empty() && factors_.back().first == n) {
    factors_.back().second = coverMul(factors_.back().second, g);
  } else {
    factors_.emplace_back(n, g);
  }
}

double EmbeddedChain::operator()(double theta) const {
  double x = theta;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    x = embedFnAt(it->first, it->second, x);
  }
  return x;
}

double EmbeddedChain::derivative(double theta) const {
  double x = theta, d = 1.0;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    d *= embedFnDerivativeAt(it->first, it->second, x);
    x = embedFnAt(it->first, it->second, x);
  }
  return d;
}

DiffeoGrid EmbeddedChain::toGrid(int gridSize) const {
  return DiffeoGrid::fromMap(gridSize, [this](double th) { return (*this)(th); });
}

}  // namespace srgeo
