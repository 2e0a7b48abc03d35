#include "srgeo/core/random.hpp"

#include <cmath>
#include <numbers>

namespace srgeo {

double Rng::uniform(double lo, double hi) {
  // 53 random bits -> [0,1)
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double Rng::normal() {
  if (haveSpare_) {
    haveSpare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
  haveSpare_ = true;
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

int Rng::uniformInt(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

}  // namespace srgeo
