#pragma once

#include <span>
#include <vector>

#include "srgeo/fourier/field.hpp"

namespace srgeo {

/// Orientation-preserving circle diffeomorphism (lifted to the universal
/// cover, phi(theta + 2pi) = phi(theta) + 2pi), stored as the displacement
/// d_j = phi(theta_j) - theta_j on M uniform nodes theta_j = 2 pi j / M.
/// Off-grid values use the trigonometric interpolant of d.
class DiffeoGrid {
 public:
  /// Throws GeometryError if the sampled map is not strictly increasing.
  explicit DiffeoGrid(std::vector<double> displacement);

  static DiffeoGrid identity(int gridSize);
  static DiffeoGrid rotation(int gridSize, double angle);
  /// Samples phi (the full map, not the displacement).
  static DiffeoGrid fromMap(int gridSize, const std::function<double(double)>& phi);

  int size() const { return static_cast<int>(disp_.size()); }
  double node(int j) const;
  std::span<const double> displacement() const { return disp_; }
  /// phi at the grid nodes.
  std::vector<double> values() const;
  bool isRotation() const { return rotation_; }

  double operator()(double theta) const;
  /// phi and phi' at arbitrary points (deriv may be empty).
  void evaluate(std::span<const double> theta, std::span<double> value,
                std::span<double> deriv = {}) const;
  /// phi' and phi'' at the nodes (spectral).
  std::vector<double> derivative() const;
  std::vector<double> secondDerivative() const;
  /// Interpolating coefficients of the displacement (band M/2).
  const FourierField& displacementField() const { return field_; }

 private:
  void check() const;

  std::vector<double> disp_;
  FourierField field_;
  bool rotation_ = false;
};

/// (f o g)(theta_j) = f(g(theta_j)).
DiffeoGrid compose(const DiffeoGrid& f, const DiffeoGrid& g);
/// f^{-1}, solving f(psi_j) = theta_j node by node (bracketed Newton).
DiffeoGrid invert(const DiffeoGrid& f);
/// max_j |phi_j - psi_j| on the cover.
double supDistance(const DiffeoGrid& f, const DiffeoGrid& g);

/// Ad_phi x = (phi' x) o phi^{-1}, returned at band limit N (N <= M/2).
FourierField adAction(const DiffeoGrid& phi, const FourierField& x, int bandLimit);
FourierField adAction(const DiffeoGrid& phi, const FourierField& x);
/// Ad_{phi^{-1}} x = (x o phi) / phi'; needs no inversion.
FourierField adActionInverse(const DiffeoGrid& phi, const FourierField& x, int bandLimit);
/// Ad of the rotation theta -> theta + angle: x(theta - angle), exact.
FourierField rotate(const FourierField& x, double angle);

}  // namespace srgeo
