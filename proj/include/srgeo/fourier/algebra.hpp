#pragma once

#include "srgeo/fourier/field.hpp"
#include "srgeo/fourier/params.hpp"

namespace srgeo {

/// Lie bracket of vector fields, [x, y] = x' y - y' x (dealiased).
FourierField bracket(const FourierField& x, const FourierField& y);

/// Average over the circle, (1/2pi) int x dtheta.
double mean(const FourierField& x);

/// Conjugate-function operator: e^{ik theta} -> i sgn(k) e^{ik theta}.
/// Maps cos n -> -sin n, sin n -> cos n and kills constants.
FourierField hilbert(const FourierField& x);

/// L x = beta x'' - alpha x, i.e. multiplier -(alpha + beta k^2).
FourierField applyL(const MetricParams& params, const FourierField& x);

/// Cocycle operator nu x'' - mu x appearing in the Virasoro coadjoint terms.
FourierField applyCocycleOperator(const CocycleParams& params, const FourierField& x);

/// omega(x, y) = (1/2pi) int (mu x y' + nu x' y'') dtheta, evaluated on
/// coefficients: 2 sum_{k>0} (mu k + nu k^3) Im(x_k conj(y_k)).
double cocycleOmega(const CocycleParams& params, const FourierField& x, const FourierField& y);

/// Metric adjoint of the bracket for the L2 product: x y' + 2 x' y.
FourierField adjointAdT(const FourierField& x, const FourierField& y);

/// Element (x, a) of the centrally extended algebra.
struct VirasoroVector {
  FourierField field;
  double central = 0.0;
};

/// [(x,a), (y,b)] = ([x,y], omega(x,y)).
VirasoroVector bracket(const CocycleParams& params, const VirasoroVector& x,
                       const VirasoroVector& y);

/// Adjoint for the extended L2 product <(x,a),(y,b)> = <x,y> + a b:
/// (x y' + 2 x' y + b (nu x''' - mu x'), 0).
VirasoroVector adjointAdT(const CocycleParams& params, const VirasoroVector& x,
                          const VirasoroVector& y);

VirasoroVector operator+(const VirasoroVector& a, const VirasoroVector& b);
VirasoroVector operator-(const VirasoroVector& a, const VirasoroVector& b);
VirasoroVector operator*(double s, const VirasoroVector& a);

}  // namespace srgeo
