#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "srgeo/core/random.hpp"
#include "srgeo/fourier/field.hpp"
#include "srgeo/group/diffeo.hpp"
#include "srgeo/su11/su11.hpp"

namespace srgeo::checks {

/// One measured quantity against its tolerance.
struct Measurement {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

Measurement measure(std::string name, double measured, double tolerance);

/// A numbered acceptance criterion made of one or more measurements.
struct Criterion {
  int number = 0;
  std::string title;
  std::vector<Measurement> items;
  std::string error;  // set when the check threw

  bool pass() const;
  void add(std::string name, double measured, double tolerance);
};

struct SuiteReport {
  std::string suite;
  std::vector<Criterion> criteria;
  double seconds = 0.0;  // wall time; kept out of the JSON report so it stays reproducible

  bool pass() const;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  /// Branch rule used by the SU(1,1) lift checks; `principal` is the
  /// negative control.
  BranchRule branchRule = BranchRule::continuous;
};

enum class Suite { fourier, geodesic, group, su11, finite };

std::string suiteName(Suite s);
/// "all" expands to every suite; throws InputError for unknown names.
std::vector<Suite> parseSuites(const std::string& name);

SuiteReport runFourierChecks(const CheckOptions& opts);   // criteria 1, 2
SuiteReport runGeodesicChecks(const CheckOptions& opts);  // criteria 3, 4, 5, 7
SuiteReport runGroupChecks(const CheckOptions& opts);     // criterion 10
SuiteReport runSu11Checks(const CheckOptions& opts);      // criteria 6, 9
SuiteReport runFiniteChecks(const CheckOptions& opts);    // criterion 8

SuiteReport runSuite(Suite s, const CheckOptions& opts);
/// Runs the suites concurrently; results come back in the requested order.
std::vector<SuiteReport> runSuites(const std::vector<Suite>& suites, const CheckOptions& opts);

nlohmann::json reportJson(const std::vector<SuiteReport>& reports, const CheckOptions& opts);
bool allPass(const std::vector<SuiteReport>& reports);
/// All criteria of all reports sorted by number.
std::vector<Criterion> sortedCriteria(const std::vector<SuiteReport>& reports);

// Random inputs shared by the suites and the property tests.

/// Field with Gaussian coefficients on modes 1..degree (and the mean if
/// requested), scaled by amplitude / k^2, at band limit `bandLimit`.
FourierField randomField(Rng& rng, int bandLimit, int degree, double amplitude,
                         bool withMean = false);
/// Smooth diffeomorphism theta + d(theta) with |d'| <= maxSlope < 1.
DiffeoGrid randomDiffeo(Rng& rng, int gridSize, int degree, double maxSlope = 0.5);
CoverElement randomCover(Rng& rng, double maxS = 3.0, double maxW = 1.0);

}  // namespace srgeo::checks
