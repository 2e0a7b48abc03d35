#pragma once

#include <complex>
#include <optional>
#include <string>

#include "srgeo/fourier/algebra.hpp"
#include "srgeo/fourier/metrics.hpp"

namespace srgeo {

enum class ModelKind { h10, hab, vir10, virab, kahler };

/// One of the five normal-geodesic equations on the circle. Each has the
/// Euler-Arnold form  A u_t = ad^T_u (A u + s*lambda1, lambda2)  for an
/// inertia operator A with positive symbol a(k):
///
///   h10     a = 1                       u_t = 3uu' + 2l u'
///   hab     a = alpha + beta k^2        L u_t = u Lu' + 2u' Lu - 2l u'
///   vir10   a = 1, central lambda2      u_t = 3uu' + (2l1 - l2 mu)u' + l2 nu u'''
///   virab   a = alpha + beta k^2        L u_t = u Lu' + 2u' Lu - 2l1 u' - l2 (nu u''' - mu u')
///   kahler  a = |k|(alpha + beta k^2)   LJ u_t' = u (LJu')' + 2u' LJu' - 2l u'
class Model {
 public:
  static Model h10() { return Model(ModelKind::h10, std::nullopt, {}); }
  static Model hab(const MetricParams& m) { return Model(ModelKind::hab, m, {}); }
  static Model vir10(const CocycleParams& c) { return Model(ModelKind::vir10, std::nullopt, c); }
  static Model virab(const MetricParams& m, const CocycleParams& c) {
    return Model(ModelKind::virab, m, c);
  }
  static Model kahler(const MetricParams& m) { return Model(ModelKind::kahler, m, {}); }

  ModelKind kind() const { return kind_; }
  std::string name() const;
  bool isVirasoro() const { return kind_ == ModelKind::vir10 || kind_ == ModelKind::virab; }
  const std::optional<MetricParams>& metric() const { return metric_; }
  const CocycleParams& cocycle() const { return cocycle_; }

  /// Symbol of the inertia operator on mode k (k != 0); positive.
  double inertia(int k) const;
  /// Sign with which lambda (or lambda1) enters the coadjoint argument.
  double lambdaSign() const { return kind_ == ModelKind::kahler ? -1.0 : 1.0; }
  /// Metric whose half-square is the conserved energy.
  InnerProduct energyMetric() const;
  /// Throws ParameterError if an active mode has vanishing inertia.
  void validateFor(int bandLimit) const;

 private:
  Model(ModelKind kind, std::optional<MetricParams> m, CocycleParams c)
      : kind_(kind), metric_(m), cocycle_(c) {}

  ModelKind kind_;
  std::optional<MetricParams> metric_;
  CocycleParams cocycle_;
};

/// Logarithmic derivative u and the Lagrange multipliers. lambda2 is the
/// central multiplier and is ignored by the non-Virasoro models.
struct GeodesicState {
  FourierField u;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

/// du/dt for the model, obtained by inverting the inertia operator mode-wise.
/// The returned field has zero mean.
FourierField geodesicRHS(const Model& model, const GeodesicState& state);

/// Same quantity through the defining identity of the adjoint:
/// <A u_t, z> = <A u + s*l1, [u, z]> + l2 omega(u, z), tested against every
/// basis harmonic z. O(N^2); used to cross-check geodesicRHS.
FourierField geodesicRHSWeakForm(const Model& model, const GeodesicState& state);

/// Right-hand side before inversion, ad^T_u(A u + s*l1, l2). Its mean is
/// the rate of change of lambda and vanishes for every shipped model.
FourierField coadjointForce(const Model& model, const GeodesicState& state);
double lambdaRate(const Model& model, const GeodesicState& state);

/// Part of du/dt that is linear in u with constant coefficients (all lambda
/// terms): du/dt on mode k gains linearSymbol(k) * u_k.
std::complex<double> linearSymbol(const Model& model, const GeodesicState& state, int k);

/// (1/2) <u, u> in the model's metric.
double energy(const Model& model, const FourierField& u);

}  // namespace srgeo
