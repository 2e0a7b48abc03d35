#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace srgeo {

using VectorXd = Eigen::VectorXd;
using MatrixXd = Eigen::MatrixXd;

/// T[a][b][c] for small dimensions, stored flat.
class Tensor3 {
 public:
  explicit Tensor3(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n, 0.0) {}
  int dim() const { return n_; }
  double& operator()(int a, int b, int c) { return data_[(a * n_ + b) * n_ + c]; }
  double operator()(int a, int b, int c) const { return data_[(a * n_ + b) * n_ + c]; }

 private:
  int n_;
  std::vector<double> data_;
};

/// Sub-Riemannian structure on a chart of R^n: an orthonormal frame
/// X_1..X_n whose first k fields span the horizontal distribution.
///
/// Index conventions (0-based in code):
///   structure(m)(a, b, d)  = c_{ab}^d = theta_d([X_a, X_b])
///   connection(m)(i, j, l) = Gamma_{ij}^l = g(nabla_{X_j} X_l, X_i)
/// with [X, Y] = DY X - DX Y, and Gamma_{ij}^l - Gamma_{ji}^l = c_{ij}^l.
class FrameSR {
 public:
  /// frame(m) returns the n x n matrix whose columns are X_1(m)..X_n(m).
  using FrameFn = std::function<MatrixXd(const VectorXd&)>;
  using ConnectionFn = std::function<Tensor3(const VectorXd&)>;

  FrameSR(int dim, int rank, FrameFn frame, std::optional<ConnectionFn> connection = {});

  int dim() const { return dim_; }
  int rank() const { return rank_; }

  /// Throws GeometryError when the frame is singular or its condition
  /// number exceeds 1e12.
  MatrixXd frame(const VectorXd& m) const;
  /// Rows are the dual one-forms theta_1..theta_n.
  MatrixXd coframe(const VectorXd& m) const;
  double conditionNumber(const VectorXd& m) const;

  Tensor3 structure(const VectorXd& m) const;
  Tensor3 connection(const VectorXd& m) const;
  bool hasConnectionCallback() const { return connection_.has_value(); }

 private:
  Tensor3 structureByDifferences(const VectorXd& m) const;

  int dim_;
  int rank_;
  FrameFn frame_;
  std::optional<ConnectionFn> connection_;
};

/// Covector in frame components p_i = p(X_i(m)) at chart point m.
struct CotangentState {
  VectorXd m;
  VectorXd p;
};

struct NormalTrajectory {
  std::vector<double> times;
  std::vector<CotangentState> states;
  std::vector<double> hamiltonian;
  double maxHamiltonianDrift = 0.0;  // relative
  double maxVertical = 0.0;          // max_{j>k} |theta_j(m_t)| (finite differences)
};

/// (1/2) sum_{j<k} p_j^2
double hamiltonian(const FrameSR& sys, const CotangentState& s);

/// Normal geodesic: m_t = sum_{j<k} p_j X_j,
/// p_i' = -sum_{j<k} sum_l p_j p_l c_{ij}^l. RK4 with fixed step.
NormalTrajectory srNormalFlow(const FrameSR& sys, const CotangentState& s0, double dt, int steps);

/// (a^T(y) x)_i = sum_{j,l} x_l y_j (Gamma_{ij}^l - Gamma_{ji}^l).
VectorXd frameAdjoint(const FrameSR& sys, const VectorXd& m, const VectorXd& y,
                      const VectorXd& x);

/// Heisenberg frame X = dx - (y/2) dz, Y = dy + (x/2) dz, Z = dz (rank 2).
FrameSR heisenbergFrame();
/// Martinet frame X = dx - (y^2/2) dz, Y = dy, Z = dz (rank 2).
FrameSR martinetFrame(bool withConnection = false);

}  // namespace srgeo
