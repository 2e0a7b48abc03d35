#pragma once

#include <span>
#include <vector>

namespace srgeo {

// Fourth-order stencils on a uniform time grid t_i = i * dt.

/// Offsets and weights w such that f'(t_i) ~ sum_j w_j f_{i+offset_j} / dt.
/// Central five-point in the interior, one-sided near the ends; needs >= 5
/// samples.
struct Stencil {
  int first = 0;  // index of the first sample used
  double weights[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
};
Stencil derivativeStencil(int i, int count);

/// d/dt of a sampled scalar series.
std::vector<double> timeDerivative(std::span<const double> f, double dt);

/// d/dt at step i of a series of equally sized arrays.
std::vector<double> timeDerivativeAt(const std::vector<std::vector<double>>& series, int i,
                                     double dt);

/// W_i = int_0^{t_i} f dt with the fourth-order rule
/// W_{i+1} = W_i + dt/24 (-f_{i-1} + 13 f_i + 13 f_{i+1} - f_{i+2}),
/// using one-sided four-point rules on the first and last interval.
/// Falls back to the trapezoid rule for fewer than four samples.
std::vector<double> cumulativeIntegral(std::span<const double> f, double dt);

/// Values at t_i + dt/2 by cubic Lagrange interpolation of a series of arrays
/// (linear when fewer than four samples exist).
std::vector<double> midpointValue(const std::vector<std::vector<double>>& series, int i);

}  // namespace srgeo
