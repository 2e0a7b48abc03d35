#pragma once

#include <complex>
#include <span>

namespace srgeo {

// Real-data DFT on M uniform nodes theta_j = 2*pi*j/M.
//
// forwardReal:  half[k] = (1/M) sum_j f_j e^{-ik theta_j},  k = 0..M/2
// inverseReal:  f_j = half[0] + 2 Re sum_{0<k<M/2} half[k] e^{ik theta_j}
//                     + half[M/2] (-1)^j            (M even)
//
// Plans are created lazily per size and cached for the lifetime of the
// process; both calls are safe to use from several threads at once.
void forwardReal(std::span<const double> samples, std::span<std::complex<double>> half);
void inverseReal(std::span<const std::complex<double>> half, std::span<double> samples);

}  // namespace srgeo
