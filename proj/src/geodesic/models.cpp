#include "srgeo/geodesic/models.hpp"

#include <cmath>

#include "srgeo/core/error.hpp"

namespace srgeo {
namespace {

using Complex = std::complex<double>;

// A applied mode-wise; the mean is passed through unchanged.
FourierField applyInertia(const Model& model, const FourierField& u) {
  FourierField r(u);
  for (int k = 1; k <= u.bandLimit(); ++k) r.setCoeff(k, model.inertia(k) * u.coeff(k));
  return r;
}

FourierField invertInertia(const Model& model, const FourierField& f) {
  FourierField r(f.bandLimit());
  for (int k = 1; k <= f.bandLimit(); ++k) r.setCoeff(k, f.coeff(k) / model.inertia(k));
  return r;
}

}  // namespace

std::string Model::name() const {
  switch (kind_) {
    case ModelKind::h10: return "h10";
    case ModelKind::hab: return "hab";
    case ModelKind::vir10: return "vir10";
    case ModelKind::virab: return "virab";
    case ModelKind::kahler: return "kahler";
  }
  return "unknown";
}

double Model::inertia(int k) const {
  switch (kind_) {
    case ModelKind::h10:
    case ModelKind::vir10: return 1.0;
    case ModelKind::hab:
    case ModelKind::virab: return metric_->symbol(k);
    case ModelKind::kahler: return std::abs(k) * metric_->symbol(k);
  }
  return 1.0;
}

InnerProduct Model::energyMetric() const {
  switch (kind_) {
    case ModelKind::h10:
    case ModelKind::vir10: return InnerProduct::h10();
    case ModelKind::hab:
    case ModelKind::virab: return InnerProduct::hab(*metric_);
    case ModelKind::kahler: return InnerProduct::kahler(*metric_);
  }
  return InnerProduct::h10();
}

void Model::validateFor(int bandLimit) const {
  if (metric_) metric_->validateFor(bandLimit);
  for (int k = 1; k <= bandLimit; ++k) {
    if (!(inertia(k) > 0.0)) {
      throw ParameterError(name() + ": inertia symbol not positive on mode " + std::to_string(k));
    }
  }
}

FourierField coadjointForce(const Model& model, const GeodesicState& state) {
  const FourierField& u = state.u;
  const FourierField du = u.derivative();
  switch (model.kind()) {
    case ModelKind::h10:
      return sumOfProducts({{u, du, 3.0}}) + (2.0 * state.lambda1) * du;
    case ModelKind::vir10: {
      const CocycleParams& c = model.cocycle();
      return sumOfProducts({{u, du, 3.0}}) +
             (2.0 * state.lambda1 - state.lambda2 * c.mu) * du +
             (state.lambda2 * c.nu) * u.derivative(3);
    }
    case ModelKind::hab:
    case ModelKind::virab: {
      // written with L = -A, as in the stated PDE
      const FourierField lu = applyL(*model.metric(), u);
      FourierField f = sumOfProducts({{u, lu.derivative(), 1.0}, {du, lu, 2.0}}) -
                       (2.0 * state.lambda1) * du;
      if (model.kind() == ModelKind::virab) {
        f -= state.lambda2 * applyCocycleOperator(model.cocycle(), du);
      }
      return f;
    }
    case ModelKind::kahler: {
      const FourierField g = applyL(*model.metric(), hilbert(du));
      return sumOfProducts({{u, g.derivative(), 1.0}, {du, g, 2.0}}) -
             (2.0 * state.lambda1) * du;
    }
  }
  return FourierField(u.bandLimit());
}

double lambdaRate(const Model& model, const GeodesicState& state) {
  return mean(coadjointForce(model, state));
}

FourierField geodesicRHS(const Model& model, const GeodesicState& state) {
  model.validateFor(state.u.bandLimit());
  const FourierField f = coadjointForce(model, state);
  switch (model.kind()) {
    case ModelKind::h10:
    case ModelKind::vir10:
    case ModelKind::kahler: return invertInertia(model, f);
    case ModelKind::hab:
    case ModelKind::virab: return -invertInertia(model, f);
  }
  return f;
}

FourierField geodesicRHSWeakForm(const Model& model, const GeodesicState& state) {
  model.validateFor(state.u.bandLimit());
  const int n = state.u.bandLimit();
  const FourierField& u = state.u;
  FourierField mom = applyInertia(model, u);
  mom.setCoeff(0, mom.coeff(0) + model.lambdaSign() * state.lambda1);
  const CocycleParams& c = model.cocycle();
  const bool central = model.isVirasoro();
  // v_k = <v, cos k> - i <v, sin k> for the L2 pairing of coefficients
  auto pair = [&](const FourierField& z) {
    double s = innerProduct(InnerProduct::h10(), mom, bracket(u, z));
    if (central) s += state.lambda2 * cocycleOmega(c, u, z);
    return s;
  };
  FourierField rhs(n);
  for (int k = 1; k <= n; ++k) {
    const double re = pair(FourierField::cosine(n, k));
    const double im = -pair(FourierField::sine(n, k));
    rhs.setCoeff(k, Complex(re, im) / model.inertia(k));
  }
  return rhs;
}

std::complex<double> linearSymbol(const Model& model, const GeodesicState& state, int k) {
  const double kd = k;
  const Complex ik(0.0, kd);
  const double l1 = state.lambda1, l2 = state.lambda2;
  if (k == 0) return 0.0;
  switch (model.kind()) {
    case ModelKind::h10: return 2.0 * l1 * ik;
    case ModelKind::vir10: {
      const CocycleParams& c = model.cocycle();
      return Complex(0.0, (2.0 * l1 - l2 * c.mu) * kd - l2 * c.nu * kd * kd * kd);
    }
    case ModelKind::hab: return 2.0 * l1 * ik / model.inertia(k);
    case ModelKind::virab: {
      const CocycleParams& c = model.cocycle();
      // -2 l1 ik - l2 (-(mu + nu k^2)) ik, divided by the L symbol -(alpha + beta k^2)
      const Complex forced = -2.0 * l1 * ik + l2 * (c.mu + c.nu * kd * kd) * ik;
      return -forced / model.inertia(k);
    }
    case ModelKind::kahler: return -2.0 * l1 * ik / model.inertia(k);
  }
  return 0.0;
}

double energy(const Model& model, const FourierField& u) {
  return 0.5 * model.energyMetric()(u, u);
}

}  // namespace srgeo
