#pragma once

namespace srgeo {

/// Coefficients of the H^{alpha,beta} type metrics and of
/// L_{alpha,beta} x = beta x'' - alpha x.
class MetricParams {
 public:
  /// Throws ParameterError unless beta >= 0 and alpha > -beta.
  MetricParams(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  /// alpha + beta k^2; the L operator acts on mode k by its negative.
  double symbol(int k) const { return alpha_ + beta_ * static_cast<double>(k) * k; }
  /// Throws ParameterError if symbol(n) vanishes for some 1 <= n <= N.
  void validateFor(int bandLimit) const;

 private:
  double alpha_;
  double beta_;
};

/// Weights of the Gelfand-Fuchs cocycle mu x y' + nu x' y''.
struct CocycleParams {
  double mu = 0.0;
  double nu = 0.0;
  /// nu = 0 gives a cohomologically trivial extension.
  bool trivial() const { return nu == 0.0; }
};

}  // namespace srgeo
