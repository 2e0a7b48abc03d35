#include "srgeo/su11/su11.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace srgeo {
namespace {

constexpr double kPi = std::numbers::pi;

double radius(const CoverElement& g) { return std::sqrt(std::norm(g.w) + 1.0); }

}  // namespace

std::array<std::array<Complex, 2>, 2> Su11Matrix::entries() const {
  return {{{z1, z2}, {std::conj(z2), std::conj(z1)}}};
}

Su11Matrix operator*(const Su11Matrix& a, const Su11Matrix& b) {
  return {a.z1 * b.z1 + a.z2 * std::conj(b.z2), a.z1 * b.z2 + a.z2 * std::conj(b.z1)};
}

double maxDistance(const Su11Matrix& a, const Su11Matrix& b) {
  return std::max(std::abs(a.z1 - b.z1), std::abs(a.z2 - b.z2));
}

LorentzFunctions lorentzFunctions(const Su11Vector& a, double t, BranchRule rule) {
  const double q = a.lorentzNorm();
  LorentzFunctions f;
  if (q > 0.0) {
    const double r = std::sqrt(q);
    f.C = std::cosh(r * t);
    f.S = std::sinh(r * t) / r;
  } else if (q == 0.0) {
    f.C = 1.0;
    f.S = t;
  } else {
    const double r = std::sqrt(-q);
    f.C = std::cos(r * t);
    f.S = std::sin(r * t) / r;
  }
  if (q >= 0.0 || rule == BranchRule::principal) {
    // C > 0 here, so the principal branch is already continuous
    f.T = q >= 0.0 ? std::atan2(a.a3 * f.S, f.C) : std::atan(a.a3 * f.S / f.C);
    return f;
  }
  // With phi = r t the argument is (|a3|/r) tan(phi); follow phi across the
  // poles of tan by snapping the principal angle to the nearest 2 pi sheet.
  const double r = std::sqrt(-q);
  const double phi = r * t;
  const double p = std::atan2(std::abs(a.a3) / r * std::sin(phi), std::cos(phi));
  const double sheet = std::nearbyint((phi - p) / (2.0 * kPi));
  const double sign = a.a3 > 0.0 ? 1.0 : (a.a3 < 0.0 ? -1.0 : 0.0);
  f.T = sign * (p + 2.0 * kPi * sheet);
  return f;
}

Su11Matrix expMatrix(const Su11Vector& a, double t) {
  const LorentzFunctions f = lorentzFunctions(a, t / 2.0);
  const Complex i(0.0, 1.0);
  return {Complex(f.C, -a.a3 * f.S), i * Complex(a.a1, a.a2) * f.S};
}

CoverElement expCover(const Su11Vector& a, double t, BranchRule rule) {
  const LorentzFunctions f = lorentzFunctions(a, t / 2.0, rule);
  return {f.T, Complex(0.0, 1.0) * Complex(a.a1, a.a2) * f.S};
}

CoverElement coverMul(const CoverElement& g1, const CoverElement& g2) {
  const double r1 = radius(g1), r2 = radius(g2);
  const Complex e = std::polar(1.0, -(g1.s + g2.s));
  CoverElement g;
  g.s = g1.s + g2.s + std::arg(r1 * r2 + std::conj(g1.w) * g2.w * e);
  g.w = g2.w * std::polar(1.0, -g1.s) * r1 + g1.w * std::polar(1.0, g2.s) * r2;
  return g;
}

CoverElement coverInverse(const CoverElement& g) { return {-g.s, -g.w}; }

Su11Matrix coverProject(const CoverElement& g) {
  return {std::polar(radius(g), -g.s), g.w};
}

}  // namespace srgeo
