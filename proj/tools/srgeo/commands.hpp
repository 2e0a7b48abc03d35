#pragma once

#include <cstdint>
#include <string>

namespace srgeo::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // failed checks, unexpected errors
inline constexpr int kExitUsage = 2;     // bad flags, config or parameters
inline constexpr int kExitDiverged = 3;  // numerical divergence (partial outputs flagged)
inline constexpr int kExitSteering = 4;  // steering did not converge

struct GeodesicOptions {
  std::string model = "h10";
  double alpha = 1.0;
  double beta = 1.0;
  double mu = 0.0;
  double nu = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::string init = "0,0.1";  // field literal or "random"
  int bandLimit = 128;
  int grid = 256;
  double dt = 1e-3;
  int steps = 1000;
  int sampleEvery = 10;
  std::string scheme = "auto";  // auto | rk4 | ifrk4
  bool keepMean = false;
  bool flow = false;
  std::uint64_t seed = 1;
  std::string output = "geodesic";
};

struct SteerOptions {
  double targetRotation = 0.0;
  double tol = 1e-4;
  int subgroup = 1;
  bool center = false;
  double b0 = 0.0;
  double b = 0.0;
  double mu = 0.0;
  double nu = 1.0;
  std::string slopes = "paper";  // paper | lifted
  int samplesPerStage = 16;
  int grid = 256;
  std::string output = "steer";
};

struct MartinetOptions {
  std::string v = "sin_pi";
  double s = 1e-2;
  int samples = 2000;
  std::string normalFrame = "none";  // none | heisenberg | martinet
  std::string m = "0,0,0";
  std::string p = "1,0,0.5";
  double dt = 1e-3;
  int steps = 1000;
  std::string output = "martinet";
};

struct CheckCommandOptions {
  std::string suite = "all";
  std::uint64_t seed = 1;
  bool injectFault = false;
  std::string report;  // optional JSON file
};

int runGeodesic(const GeodesicOptions& o);
int runSteer(const SteerOptions& o);
int runMartinet(const MartinetOptions& o);
int runCheck(const CheckCommandOptions& o);

}  // namespace srgeo::cli
