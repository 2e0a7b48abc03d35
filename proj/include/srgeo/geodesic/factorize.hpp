#pragma once

#include <vector>

#include "srgeo/geodesic/models.hpp"

namespace srgeo {

struct Factorization {
  std::vector<FourierField> uSR;  // horizontal logarithmic derivative
  double lambda = 0.0;            // rotation speed split off, mean(uR(0))
  double riemannResidual = 0.0;   // relative residual of the input against u_t = 3uu'
};

/// Relative residual max_t ||u_t - f(u)|| / max(1, max_t ||f(u)||) with
/// u_t from fourth-order differences and f = geodesicRHS(model, state)
/// evaluated with the given multipliers and the mean of u retained.
double geodesicResidual(const Model& model, const std::vector<FourierField>& u, double lambda1,
                        double lambda2, double dt);

/// Splits a Riemannian H^0 geodesic (u_t = 3uu', possibly with mean) into
/// its rotation and horizontal parts:
///   lambda = mean(uR(0)),  uSR(t)(theta) = uR(t)(theta - lambda t) - lambda.
/// uSR then solves u_t = 3uu' + 2 lambda u'. Throws InputError if uR is not
/// a Riemannian geodesic to `tolerance`.
Factorization factorizeSR(const std::vector<FourierField>& uR, double dt,
                          double tolerance = 1e-6);

}  // namespace srgeo
