#pragma once

#include <cstdint>
#include <random>

namespace srgeo {

// Seeded generator with a portable uniform mapping, so that randomized
// checks produce byte-identical output on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi).
  double uniform(double lo = 0.0, double hi = 1.0);
  /// Standard normal via Box-Muller (portable, unlike std::normal_distribution).
  double normal();
  int uniformInt(int lo, int hi);  // inclusive

 private:
  std::mt19937_64 engine_;
  bool haveSpare_ = false;
  double spare_ = 0.0;
};

}  // namespace srgeo
