#pragma once

#include "srgeo/fourier/params.hpp"
#include "srgeo/group/diffeo.hpp"

namespace srgeo {

/// Element (phi, b) of the centrally extended diffeomorphism group.
struct VirasoroElement {
  DiffeoGrid phi;
  double b = 0.0;
};

/// Coboundary part (1/4pi) int (-phi1 o phi2 + phi1 + phi2 - id) dtheta.
double cocycleA(const DiffeoGrid& phi1, const DiffeoGrid& phi2);
/// Bott part (1/4pi) int log((phi1 o phi2)') * phi2''/phi2' dtheta.
double cocycleB(const DiffeoGrid& phi1, const DiffeoGrid& phi2);
/// mu A + nu B
double groupCocycle(const CocycleParams& params, const DiffeoGrid& phi1, const DiffeoGrid& phi2);

/// (phi1 o phi2, b1 + b2 + mu A + nu B)
VirasoroElement virMultiply(const VirasoroElement& g1, const VirasoroElement& g2,
                            const CocycleParams& params);
/// (phi^{-1}, -b); both cocycles vanish on (phi, phi^{-1}).
VirasoroElement virInverse(const VirasoroElement& g);

/// (1/4pi) int (phi - id) dtheta; F(phi) + F(phi^{-1}) = 0.
double meanDisplacementFunctional(const DiffeoGrid& phi);

}  // namespace srgeo
