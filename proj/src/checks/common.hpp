#pragma once

#include <chrono>
#include <exception>
#include <string>
#include <utility>

#include "srgeo/checks/checks.hpp"

namespace srgeo::checks::detail {

// Runs body(criterion); an exception fails the criterion with its message.
template <class Body>
Criterion runCriterion(int number, std::string title, Body&& body) {
  Criterion c;
  c.number = number;
  c.title = std::move(title);
  try {
    body(c);
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  return c;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Independent streams per criterion so suites can be run in any order.
inline Rng streamFor(const CheckOptions& opts, int criterion) {
  return Rng(opts.seed * 1000003ULL + static_cast<std::uint64_t>(criterion));
}

}  // namespace srgeo::checks::detail
