#pragma once

#include <utility>
#include <vector>

#include "srgeo/group/diffeo.hpp"
#include "srgeo/su11/su11.hpp"

namespace srgeo {

/// f_n(s, w)(theta) = theta + (2/n) s + (2/n) Arg(R + i conj(w) e^{-i(n theta + s)}),
/// R = sqrt(|w|^2 + 1): an injective homomorphism from the cover into the
/// lifted diffeomorphisms, onto the subgroup generated by p_0, p_n, k_n.
double embedFnAt(int n, const CoverElement& g, double theta);
/// d/dtheta of embedFnAt.
double embedFnDerivativeAt(int n, const CoverElement& g, double theta);
DiffeoGrid embedFn(int n, const CoverElement& g, int gridSize);

/// Cover element whose image under f_n is the time-t flow of
/// a1 k_n + a2 p_n + a3 p_0, namely expCover((-a1, -a2, a3), n t).
CoverElement flowCoverElement(int n, double a1, double a2, double a3, double t);
/// Time-t flow of the vector field a1 sin(n theta) + a2 cos(n theta) + a3.
DiffeoGrid expDiffHn(int n, double a1, double a2, double a3, double t, int gridSize);

/// Composition f_{n_1}(g_1) o f_{n_2}(g_2) o ... evaluated exactly, point by
/// point. Adjacent factors in the same subgroup are merged in the cover.
class EmbeddedChain {
 public:
  EmbeddedChain() = default;

  /// Right-multiplies by f_n(g).
  void append(int n, const CoverElement& g);
  const std::vector<std::pair<int, CoverElement>>& factors() const { return factors_; }

  double operator()(double theta) const;
  double derivative(double theta) const;
  DiffeoGrid toGrid(int gridSize) const;

 private:
  std::vector<std::pair<int, CoverElement>> factors_;
};

}  // namespace srgeo
