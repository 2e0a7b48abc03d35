// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Usage: acceptance [--seed N] [--verbose]

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>

#include "srgeo/checks/checks.hpp"

namespace {

// Worst measurement, judged by measured / tolerance.
const srgeo::checks::Measurement* worst(const srgeo::checks::Criterion& c) {
  const srgeo::checks::Measurement* w = nullptr;
  double ratio = -1.0;
  for (const auto& m : c.items) {
    const double r = !m.pass ? INFINITY : (m.tolerance > 0.0 ? m.measured / m.tolerance : 0.0);
    if (r > ratio) {
      ratio = r;
      w = &m;
    }
  }
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  srgeo::checks::CheckOptions opts;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      opts.seed = std::stoull(argv[++i]);
    } else if (std::strcmp(argv[i], "--verbose") == 0) {
      verbose = true;
    } else {
      std::fprintf(stderr, "usage: %s [--seed N] [--verbose]\n", argv[0]);
      return 2;
    }
  }

  const auto reports = srgeo::checks::runSuites(srgeo::checks::parseSuites("all"), opts);
  const auto criteria = srgeo::checks::sortedCriteria(reports);
  int failed = 0;
  for (const auto& c : criteria) {
    const bool ok = c.pass();
    failed += ok ? 0 : 1;
    std::printf("%s  criterion %2d: %s", ok ? "PASS" : "FAIL", c.number, c.title.c_str());
    if (!c.error.empty()) {
      std::printf("  [error: %s]", c.error.c_str());
    } else if (const auto* w = worst(c)) {
      std::printf("  [worst: %s = %.3g, tol %.3g]", w->name.c_str(), w->measured, w->tolerance);
    }
    std::printf("\n");
    if (verbose || !ok) {
      for (const auto& m : c.items) {
        std::printf("      %s %-60s %.3e  (tol %.1e)\n", m.pass ? "ok  " : "FAIL", m.name.c_str(),
                    m.measured, m.tolerance);
      }
    }
  }
  for (const auto& r : reports) std::printf("suite %-9s %.2f s\n", r.suite.c_str(), r.seconds);
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
