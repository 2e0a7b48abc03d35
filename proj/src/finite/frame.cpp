#include "srgeo/finite/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "srgeo/core/error.hpp"
#include "srgeo/core/timegrid.hpp"

namespace srgeo {
namespace {

constexpr double kFdStep = 1e-6;
constexpr double kMaxCondition = 1e12;

}  // namespace

FrameSR::FrameSR(int dim, int rank, FrameFn frame, std::optional<ConnectionFn> connection)
    : dim_(dim), rank_(rank), frame_(std::move(frame)), connection_(std::move(connection)) {
  if (dim < 1 || rank < 1 || rank > dim) throw ParameterError("FrameSR: need 1 <= k <= n");
  if (!frame_) throw ParameterError("FrameSR: missing frame callback");
}

double FrameSR::conditionNumber(const VectorXd& m) const {
  const MatrixXd f = frame_(m);
  Eigen::JacobiSVD<MatrixXd> svd(f);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  return smin > 0.0 ? sv(0) / smin : INFINITY;
}

MatrixXd FrameSR::frame(const VectorXd& m) const {
  if (m.size() != dim_) throw DimensionError("FrameSR: chart point has wrong dimension");
  MatrixXd f = frame_(m);
  if (f.rows() != dim_ || f.cols() != dim_) throw DimensionError("FrameSR: frame must be n x n");
  if (!f.allFinite()) throw GeometryError("FrameSR: frame is not finite");
  const double c = conditionNumber(m);
  if (!(c <= kMaxCondition)) {
    throw GeometryError("FrameSR: frame degenerate (condition number " + std::to_string(c) + ")");
  }
  return f;
}

MatrixXd FrameSR::coframe(const VectorXd& m) const { return frame(m).inverse(); }

Tensor3 FrameSR::structureByDifferences(const VectorXd& m) const {
  const int n = dim_;
  const MatrixXd f = frame(m);
  const MatrixXd theta = f.inverse();
  // jac[c] = d/dm_c of the frame matrix (central differences)
  std::vector<MatrixXd> jac(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    VectorXd mp = m, mm = m;
    mp(c) += kFdStep;
    mm(c) -= kFdStep;
    jac[c] = (frame_(mp) - frame_(mm)) / (2.0 * kFdStep);
  }
  // directional derivative of column b along vector v
  auto along = [&](int b, const VectorXd& v) {
    VectorXd r = VectorXd::Zero(n);
    for (int c = 0; c < n; ++c) r += v(c) * jac[c].col(b);
    return r;
  };
  Tensor3 t(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const VectorXd br = along(b, f.col(a)) - along(a, f.col(b));
      const VectorXd coeff = theta * br;
      for (int d = 0; d < n; ++d) {
        t(a, b, d) = coeff(d);
        t(b, a, d) = -coeff(d);
      }
    }
  }
  return t;
}

Tensor3 FrameSR::structure(const VectorXd& m) const {
  if (!connection_) return structureByDifferences(m);
  const Tensor3 g = (*connection_)(m);
  if (g.dim() != dim_) throw DimensionError("FrameSR: connection has wrong dimension");
  Tensor3 c(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int l = 0; l < dim_; ++l) c(i, j, l) = g(i, j, l) - g(j, i, l);
    }
  }
  return c;
}

Tensor3 FrameSR::connection(const VectorXd& m) const {
  if (connection_) return (*connection_)(m);
  // Koszul formula for an orthonormal frame
  const Tensor3 c = structureByDifferences(m);
  Tensor3 g(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int l = 0; l < dim_; ++l) {
        g(i, j, l) = 0.5 * (c(j, l, i) - c(l, i, j) + c(i, j, l));
      }
    }
  }
  return g;
}

double hamiltonian(const FrameSR& sys, const CotangentState& s) {
  double h = 0.0;
  for (int j = 0; j < sys.rank(); ++j) h += s.p(j) * s.p(j);
  return 0.5 * h;
}

namespace {

struct Deriv {
  VectorXd dm;
  VectorXd dp;
};

Deriv normalRhs(const FrameSR& sys, const VectorXd& m, const VectorXd& p) {
  const int n = sys.dim(), k = sys.rank();
  const MatrixXd f = sys.frame(m);
  const Tensor3 c = sys.structure(m);
  Deriv d{VectorXd::Zero(n), VectorXd::Zero(n)};
  for (int j = 0; j < k; ++j) d.dm += p(j) * f.col(j);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < k; ++j) {
      for (int l = 0; l < n; ++l) s += p(j) * p(l) * c(i, j, l);
    }
    d.dp(i) = -s;
  }
  return d;
}

}  // namespace

NormalTrajectory srNormalFlow(const FrameSR& sys, const CotangentState& s0, double dt,
                              int steps) {
  if (s0.m.size() != sys.dim() || s0.p.size() != sys.dim()) {
    throw DimensionError("srNormalFlow: state has wrong dimension");
  }
  if (!(dt > 0.0) || steps < 0) throw ParameterError("srNormalFlow: need dt > 0, steps >= 0");
  NormalTrajectory traj;
  VectorXd m = s0.m, p = s0.p;
  const double h0 = hamiltonian(sys, s0);
  const double scale = h0 > 0.0 ? h0 : 1.0;
  traj.times.push_back(0.0);
  traj.states.push_back(s0);
  traj.hamiltonian.push_back(h0);
  for (int i = 1; i <= steps; ++i) {
    const Deriv k1 = normalRhs(sys, m, p);
    const Deriv k2 = normalRhs(sys, m + 0.5 * dt * k1.dm, p + 0.5 * dt * k1.dp);
    const Deriv k3 = normalRhs(sys, m + 0.5 * dt * k2.dm, p + 0.5 * dt * k2.dp);
    const Deriv k4 = normalRhs(sys, m + dt * k3.dm, p + dt * k3.dp);
    m += dt / 6.0 * (k1.dm + 2.0 * (k2.dm + k3.dm) + k4.dm);
    p += dt / 6.0 * (k1.dp + 2.0 * (k2.dp + k3.dp) + k4.dp);
    if (!m.allFinite() || !p.allFinite()) {
      throw DivergenceError("srNormalFlow: non-finite state", (i - 1) * dt);
    }
    const CotangentState s{m, p};
    const double h = hamiltonian(sys, s);
    traj.maxHamiltonianDrift = std::max(traj.maxHamiltonianDrift, std::abs(h - h0) / scale);
    traj.times.push_back(i * dt);
    traj.states.push_back(s);
    traj.hamiltonian.push_back(h);
  }
  // vertical components of the velocity from fourth-order differences
  if (traj.states.size() >= 5) {
    std::vector<std::vector<double>> series;
    series.reserve(traj.states.size());
    for (const auto& s : traj.states) series.emplace_back(s.m.data(), s.m.data() + s.m.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
      const std::vector<double> v = timeDerivativeAt(series, static_cast<int>(i), dt);
      const VectorXd vel = Eigen::Map<const VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
      const VectorXd comps = sys.coframe(traj.states[i].m) * vel;
      for (int j = sys.rank(); j < sys.dim(); ++j) {
        traj.maxVertical = std::max(traj.maxVertical, std::abs(comps(j)));
      }
    }
  }
  return traj;
}

VectorXd frameAdjoint(const FrameSR& sys, const VectorXd& m, const VectorXd& y,
                      const VectorXd& x) {
  const int n = sys.dim();
  if (x.size() != n || y.size() != n) throw DimensionError("frameAdjoint: wrong dimension");
  const Tensor3 g = sys.connection(m);
  VectorXd r = VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) r(i) += x(l) * y(j) * (g(i, j, l) - g(j, i, l));
    }
  }
  return r;
}

FrameSR heisenbergFrame() {
  return FrameSR(3, 2, [](const VectorXd& m) {
    MatrixXd f = MatrixXd::Identity(3, 3);
    f(2, 0) = -0.5 * m(1);
    f(2, 1) = 0.5 * m(0);
    return f;
  });
}

FrameSR martinetFrame(bool withConnection) {
  auto frame = [](const VectorXd& m) {
    MatrixXd f = MatrixXd::Identity(3, 3);
    f(2, 0) = -0.5 * m(1) * m(1);
    return f;
  };
  if (!withConnection) return FrameSR(3, 2, frame);
  // only [X, Y] = y Z is non-zero, so Koszul gives
  //   Gamma_{ij}^l = (c_{jl}^i - c_{li}^j + c_{ij}^l) / 2 with c_{01}^2 = y
  auto connection = [](const VectorXd& m) {
    Tensor3 c(3), g(3);
    c(0, 1, 2) = m(1);
    c(1, 0, 2) = -m(1);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (int l = 0; l < 3; ++l) g(i, j, l) = 0.5 * (c(j, l, i) - c(l, i, j) + c(i, j, l));
      }
    }
    return g;
  };
  return FrameSR(3, 2, frame, connection);
}

}  // namespace srgeo
