#pragma once

#include <functional>
#include <string>

namespace srgeo {

using ScalarFn = std::function<double(double)>;

struct MartinetVariation {
  double endpointZ = 0.0;     // z^s(1)
  double ratio = 0.0;         // z^s(1) / s^2
  double leadingTerm = 0.0;   // -(1/2) int v^2, the predicted limit of ratio
  double fieldResidual = 0.0; // max |w' + (1/2) y^2 u' + y v x'| along the abnormal line
  double fieldW = 0.0;        // max |w|, the induced z-component of the variation
};

/// Horizontal variation of the abnormal line t -> (t, 0, 0) of the Martinet
/// distribution: x^s = t + s u(t), y^s = s v(t), z' = -(1/2) y^2 x', z(0) = 0,
/// integrated with the composite Simpson rule on `samples` intervals (rounded
/// up to even). u defaults to zero. v must vanish at t = 0 and t = 1
/// (InputError otherwise).
MartinetVariation martinetVariation(const ScalarFn& v, double s, int samples = 2000,
                                    const ScalarFn& u = {}, const ScalarFn& du = {});

/// Named test profiles: "sin_pi" (sin(pi t)), "t1mt" (t(1-t)), "zero".
/// Throws InputError for unknown names.
ScalarFn namedProfile(const std::string& name);

}  // namespace srgeo
