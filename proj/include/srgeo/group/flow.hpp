#pragma once

#include <vector>

#include "srgeo/fourier/params.hpp"
#include "srgeo/group/diffeo.hpp"

namespace srgeo {

/// Integrates d/dt gamma = gamma' * u(t) from gamma(0) = id, with u given on
/// the uniform time grid t_i = i * dt. RK4 in time (u at half steps by cubic
/// interpolation), spectral theta-derivatives on M nodes. Throws
/// DivergenceError when the map stops being monotone.
std::vector<DiffeoGrid> flowFromLog(const std::vector<FourierField>& u, double dt, int gridSize);

/// Left logarithmic derivative gamma_t / gamma' at each time (fourth-order
/// differences in t), truncated to band N. Needs at least five samples.
std::vector<FourierField> logDerivative(const std::vector<DiffeoGrid>& gamma, double dt,
                                        int bandLimit);

/// Rate of the central coordinate of the horizontal lift,
///   b' = (mu/4pi) int u - (mu/4pi) int u gamma' - (nu/4pi) int u' gamma''/gamma',
/// by the trapezoid rule on the grid of gamma.
double centralRate(const FourierField& u, const DiffeoGrid& gamma, const CocycleParams& params);

/// b(t) with b(0) = 0, integrating centralRate in time (fourth order).
std::vector<double> centralLift(const std::vector<FourierField>& u,
                                const std::vector<DiffeoGrid>& gamma, double dt,
                                const CocycleParams& params);

}  // namespace srgeo
