#pragma once

#include <vector>

#include "json.hpp"
#include "srgeo/fourier/field.hpp"
#include "srgeo/fourier/params.hpp"
#include "srgeo/su11/embed.hpp"

namespace srgeo {

/// Flow of the horizontal field kCoeff k_n + pCoeff p_n for unit "time",
/// traversed over `duration` with the easing sigma(tau) = tau - sin(2 pi tau)/(2 pi),
/// so the velocity vanishes at both ends of every stage.
struct SteeringStage {
  int subgroup = 1;
  double kCoeff = 0.0;
  double pCoeff = 0.0;
  double duration = 1.0;

  CoverElement increment() const;
};

class SteeringPlan {
 public:
  SteeringPlan() = default;
  explicit SteeringPlan(std::vector<SteeringStage> stages) : stages_(std::move(stages)) {}

  const std::vector<SteeringStage>& stages() const { return stages_; }
  void append(const SteeringPlan& other);
  double totalTime() const;

  /// gamma(t) as an exact chain of embedded factors; constant outside [0, T].
  EmbeddedChain at(double t) const;
  EmbeddedChain endpoint() const { return at(totalTime()); }
  /// Analytic logarithmic derivative sigma'(tau)/duration * (k k_n + p p_n).
  FourierField logDerivative(double t, int bandLimit) const;
  /// Highest subgroup index used (0 for an empty plan).
  int maxSubgroup() const;

 private:
  std::vector<SteeringStage> stages_;
};

struct RotationSteering {
  SteeringPlan plan;
  double endpointError = 0.0;  // sup_theta |gamma(T)(theta) - theta - delta|
  int pieces = 0;
  int iterations = 0;
};

/// Horizontal path inside the subgroup generated by p_0, p_n, k_n that ends at
/// the rotation by delta: ceil(|delta|/0.5) commutator loops
/// exp(a p_n) exp(b k_n) exp(c p_n) exp(d k_n), each polished by min-norm
/// Gauss-Newton on the cover coordinates. Throws SteeringError if the
/// endpoint misses by more than tol.
RotationSteering steerToRotation(double delta, double tol, int subgroup = 1);

/// Largest |mean(gamma_t / gamma')| over sample times strictly inside the
/// stages, with gamma_t from fourth-order differences (step h) of the exact
/// path; the numerical witness of horizontality.
double measureHorizontality(const SteeringPlan& plan, int samplesPerStage, int gridSize,
                            double h = 1e-3);

enum class CentralSlopes {
  paper,   // r (n^2 nu - mu) per unit rotation in subgroup n
  lifted,  // -(mu + nu n^2)/2, the value reached by the horizontal lift
};

struct CenterSteering {
  double r1 = 0.0;
  double r2 = 0.0;
  double determinant = 0.0;
  double roundTrip = 0.0;  // residual of the 2x2 system at (r1, r2)
  SteeringPlan plan;       // rotation r2 in subgroup 2, then r1 in subgroup 1
  double endpointError = 0.0;
};

/// Central slope of rotations in subgroup n.
double centralSlope(int n, const CocycleParams& params, CentralSlopes slopes);

/// Solves b0 = r1 + r2, b = r1 s_1 + r2 s_2 for the rotation amounts and
/// builds the glued two-subgroup plan. Throws ParameterError if nu = 0.
CenterSteering steerVirasoroCenter(double b0, double b, const CocycleParams& params,
                                   CentralSlopes slopes = CentralSlopes::paper,
                                   double tol = 1e-10);

/// {"stages": [{subgroup, coverElement: {s, w_re, w_im}, duration, k, p}], ...}
nlohmann::json planJson(const SteeringPlan& plan);

}  // namespace srgeo
