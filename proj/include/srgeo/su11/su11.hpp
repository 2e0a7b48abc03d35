#pragma once

#include <array>
#include <complex>

namespace srgeo {

using Complex = std::complex<double>;

/// a1 X + a2 Y + a3 Z in the basis
///   X = 1/2 [[0, i], [-i, 0]],  Y = 1/2 [[0, -1], [-1, 0]],  Z = 1/2 [[-i, 0], [0, i]].
struct Su11Vector {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  /// a1^2 + a2^2 - a3^2
  double lorentzNorm() const { return a1 * a1 + a2 * a2 - a3 * a3; }
};

/// [[z1, z2], [conj z2, conj z1]] with |z1|^2 - |z2|^2 = 1.
struct Su11Matrix {
  Complex z1{1.0, 0.0};
  Complex z2{0.0, 0.0};

  std::array<std::array<Complex, 2>, 2> entries() const;
  /// |z1|^2 - |z2|^2 - 1
  double determinantDefect() const { return std::norm(z1) - std::norm(z2) - 1.0; }
};

Su11Matrix operator*(const Su11Matrix& a, const Su11Matrix& b);
/// max entry-wise modulus of the difference
double maxDistance(const Su11Matrix& a, const Su11Matrix& b);

/// Point (s, w) of the universal cover R x C.
struct CoverElement {
  double s = 0.0;
  Complex w{0.0, 0.0};
};

struct LorentzFunctions {
  double C = 1.0;
  double S = 0.0;
  double T = 0.0;
};

enum class BranchRule {
  continuous,  // T unwrapped continuously in t
  principal,   // atan(a3 S / C) with no branch correction (deliberately wrong)
};

/// C, S, T for the vector a at time t:
///   lorentzNorm > 0: C = cosh(rt), S = sinh(rt)/r
///   lorentzNorm = 0: C = 1, S = t
///   lorentzNorm < 0: C = cos(rt), S = sin(rt)/r
/// with r = sqrt|lorentzNorm| and T the continuous branch of atan(a3 S / C).
LorentzFunctions lorentzFunctions(const Su11Vector& a, double t,
                                  BranchRule rule = BranchRule::continuous);

/// exp(t (a1 X + a2 Y + a3 Z)) in closed form.
Su11Matrix expMatrix(const Su11Vector& a, double t);
/// Lift of expMatrix to the cover, (T(t/2), i (a1 + i a2) S(t/2)).
CoverElement expCover(const Su11Vector& a, double t, BranchRule rule = BranchRule::continuous);

CoverElement coverMul(const CoverElement& g1, const CoverElement& g2);
CoverElement coverInverse(const CoverElement& g);
/// [[e^{-is} R, w], [conj w, e^{is} R]] with R = sqrt(|w|^2 + 1).
Su11Matrix coverProject(const CoverElement& g);

}  // namespace srgeo
