#pragma once

#include <vector>

#include "srgeo/group/diffeo.hpp"

namespace srgeo {

/// Solves x' + [u, x] = y, x(0) = 0, where u is the logarithmic derivative
/// of gamma (gamma(0) = id), via x(t) = Ad_{gamma(t)^{-1}} int_0^t Ad_{gamma(s)} y(s) ds.
/// All series share the time grid t_i = i * dt; the result has y's band limit.
std::vector<FourierField> invertTau(const std::vector<DiffeoGrid>& gamma,
                                    const std::vector<FourierField>& y, double dt);

/// max over times and grid nodes of |x_t + [u, x] - y|, with x_t from
/// fourth-order differences in t.
double tauResidual(const std::vector<FourierField>& u, const std::vector<FourierField>& x,
                   const std::vector<FourierField>& y, double dt);

}  // namespace srgeo
