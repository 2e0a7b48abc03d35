#pragma once

// Reference computations that share no code with the library: series
// exponentials, quadrature, closed forms and plain ODE integration. Used to
// pin library results in tests and in `srgeo check`.

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace srgeo::oracles {

using Complex = std::complex<double>;
using Mat2 = std::array<std::array<Complex, 2>, 2>;

/// Real trigonometric polynomial a0 + sum_k (a_k cos k theta + b_k sin k theta)
/// with analytic derivatives.
struct TrigPoly {
  double a0 = 0.0;
  std::vector<double> a;  // a[k-1] multiplies cos k theta
  std::vector<double> b;  // b[k-1] multiplies sin k theta

  int degree() const { return static_cast<int>(a.size()); }
  /// order-th derivative at theta.
  double operator()(double theta, int order = 0) const;
};

/// exp(M) for a 2x2 complex matrix: Taylor series with scaling and squaring.
Mat2 expm2(const Mat2& m);
/// t (a1 X + a2 Y + a3 Z), built entry by entry from the basis matrices.
Mat2 su11Generator(double a1, double a2, double a3, double t);
Mat2 multiply(const Mat2& a, const Mat2& b);
double maxEntryDistance(const Mat2& a, const Mat2& b);

/// Lift angle with the explicit ceiling branch count
///   atan(a3 S/C) + pi sgn(a3) ceil(t r / pi - 1/2)  (lorentz norm -r^2 < 0)
/// and the plain arctangent otherwise.
double lorentzTCeil(double a1, double a2, double a3, double t);

/// Principal value (1/2pi) p.v. int_0^{2pi} x(t) / tan((t - theta)/2) dt by
/// the midpoint rule after subtracting x(theta) (the kernel integrates to 0).
double hilbertQuadrature(const std::function<double(double)>& x, double theta,
                         int nodes = 4096);

/// Coefficients c_0..c_N of a sampled function by a direct O(MN) sum.
std::vector<Complex> naiveCoefficients(const std::function<double(double)>& f, int bandLimit,
                                       int nodes);

/// (1/2pi) int f dtheta by the midpoint rule.
double circleAverage(const std::function<double(double)>& f, int nodes = 2048);

/// Time-t characteristic of theta' = a1 sin(n theta) + a2 cos(n theta) + a3
/// starting at theta0, classical RK4 with `steps` steps.
double characteristicsFlow(int n, double a1, double a2, double a3, double t, double theta0,
                           int steps = 2000);

/// Endpoint of the Heisenberg normal geodesic from the origin with initial
/// frame covector (p1, p2, p3):
///   x + i y = A (e^{i p3 t} - 1)/(i p3),  z = |A|^2/(2 p3) (t - sin(p3 t)/p3).
std::array<double, 3> heisenbergEndpoint(double p1, double p2, double p3, double t);

/// d theta_i(X_a, X_b) = -theta_i([X_a, X_b]) with the bracket of frame fields
/// from central differences of `frame` (columns X_1..X_n) at step h.
using FrameFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;
double coframeDifferential(const FrameFn& frame, const Eigen::VectorXd& m, int i, int a, int b,
                           double h = 1e-5);

}  // namespace srgeo::oracles
