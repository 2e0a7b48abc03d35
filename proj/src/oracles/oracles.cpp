#include "srgeo/oracles/oracles.hpp"

#include <cmath>
#include <numbers>

namespace srgeo::oracles {

namespace {

constexpr double kPi = std::numbers::pi;

double sgn(double v) { return (v > 0.0) - (v < 0.0); }

Mat2 zero2() { return {{{Complex(0.0), Complex(0.0)}, {Complex(0.0), Complex(0.0)}}}; }

Mat2 identity2() { return {{{Complex(1.0), Complex(0.0)}, {Complex(0.0), Complex(1.0)}}}; }

}  // namespace

double TrigPoly::operator()(double theta, int order) const {
  double v = order == 0 ? a0 : 0.0;
  for (int k = 1; k <= degree(); ++k) {
    // d^order/dtheta^order of cos and sin shifts the phase by order*pi/2
    const double kk = static_cast<double>(k);
    const double scale = std::pow(kk, order);
    const double phase = kk * theta + order * kPi / 2.0;
    v += scale * (a[k - 1] * std::cos(phase) + b[k - 1] * std::sin(phase));
  }
  return v;
}

Mat2 multiply(const Mat2& a, const Mat2& b) {
  Mat2 r = zero2();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

double maxEntryDistance(const Mat2& a, const Mat2& b) {
  double d = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

Mat2 expm2(const Mat2& m) {
  double norm = 0.0;
  for (const auto& row : m)
    for (const auto& e : row) norm = std::max(norm, std::abs(e));
  int squarings = 0;
  while (norm > 0.25) {
    norm *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  Mat2 a = m;
  for (auto& row : a)
    for (auto& e : row) e *= scale;

  Mat2 result = identity2();
  Mat2 term = identity2();
  for (int k = 1; k <= 30; ++k) {
    term = multiply(term, a);
    for (auto& row : term)
      for (auto& e : row) e /= static_cast<double>(k);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) result[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s) result = multiply(result, result);
  return result;
}

Mat2 su11Generator(double a1, double a2, double a3, double t) {
  const Complex i(0.0, 1.0);
  const Mat2 x = {{{Complex(0.0), 0.5 * i}, {-0.5 * i, Complex(0.0)}}};
  const Mat2 y = {{{Complex(0.0), Complex(-0.5)}, {Complex(-0.5), Complex(0.0)}}};
  const Mat2 z = {{{-0.5 * i, Complex(0.0)}, {Complex(0.0), 0.5 * i}}};
  Mat2 g = zero2();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) g[r][c] = t * (a1 * x[r][c] + a2 * y[r][c] + a3 * z[r][c]);
  return g;
}

double lorentzTCeil(double a1, double a2, double a3, double t) {
  const double q = a1 * a1 + a2 * a2 - a3 * a3;
  if (q > 0.0) {
    const double r = std::sqrt(q);
    return std::atan(a3 / r * std::tanh(r * t));
  }
  if (q == 0.0) return std::atan(a3 * t);
  const double r = std::sqrt(-q);
  const double x = t * r;
  const double offset = std::remainder(x - kPi / 2.0, kPi);
  if (offset == 0.0) return sgn(a3) * x;
  return std::atan(a3 / r * std::tan(x)) + kPi * sgn(a3) * std::ceil(x / kPi - 0.5);
}

double hilbertQuadrature(const std::function<double(double)>& x, double theta, int nodes) {
  const double x0 = x(theta);
  const double h = 2.0 * kPi / nodes;
  double acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double u = (j + 0.5) * h;
    acc += (x(theta + u) - x0) / std::tan(0.5 * u);
  }
  return acc * h / (2.0 * kPi);
}

std::vector<Complex> naiveCoefficients(const std::function<double(double)>& f, int bandLimit,
                                       int nodes) {
  std::vector<double> values(nodes);
  for (int j = 0; j < nodes; ++j) values[j] = f(2.0 * kPi * j / nodes);
  std::vector<Complex> c(bandLimit + 1, Complex(0.0));
  for (int k = 0; k <= bandLimit; ++k) {
    Complex acc(0.0);
    for (int j = 0; j < nodes; ++j) {
      const double ang = -2.0 * kPi * static_cast<double>(k) * j / nodes;
      acc += values[j] * Complex(std::cos(ang), std::sin(ang));
    }
    c[k] = acc / static_cast<double>(nodes);
  }
  return c;
}

double circleAverage(const std::function<double(double)>& f, int nodes) {
  double acc = 0.0;
  for (int j = 0; j < nodes; ++j) acc += f(2.0 * kPi * (j + 0.5) / nodes);
  return acc / nodes;
}

double characteristicsFlow(int n, double a1, double a2, double a3, double t, double theta0,
                           int steps) {
  const auto field = [&](double th) {
    return a1 * std::sin(n * th) + a2 * std::cos(n * th) + a3;
  };
  const double h = t / steps;
  double th = theta0;
  for (int i = 0; i < steps; ++i) {
    const double k1 = field(th);
    const double k2 = field(th + 0.5 * h * k1);
    const double k3 = field(th + 0.5 * h * k2);
    const double k4 = field(th + h * k3);
    th += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return th;
}

std::array<double, 3> heisenbergEndpoint(double p1, double p2, double p3, double t) {
  if (std::abs(p3) < 1e-14) return {p1 * t, p2 * t, 0.0};
  const Complex amp(p1, p2);
  const Complex i(0.0, 1.0);
  const Complex xy = amp * (std::exp(i * (p3 * t)) - 1.0) / (i * p3);
  const double z = std::norm(amp) / (2.0 * p3) * (t - std::sin(p3 * t) / p3);
  return {xy.real(), xy.imag(), z};
}

double coframeDifferential(const FrameFn& frame, const Eigen::VectorXd& m, int i, int a, int b,
                           double h) {
  const Eigen::MatrixXd f0 = frame(m);
  const auto directional = [&](int col, const Eigen::VectorXd& dir) {
    const Eigen::VectorXd plus = frame(m + h * dir).col(col);
    const Eigen::VectorXd minus = frame(m - h * dir).col(col);
    return Eigen::VectorXd((plus - minus) / (2.0 * h));
  };
  const Eigen::VectorXd xa = f0.col(a);
  const Eigen::VectorXd xb = f0.col(b);
  const Eigen::VectorXd br = directional(b, xa) - directional(a, xb);
  const Eigen::VectorXd coeffs = f0.fullPivLu().solve(br);
  return -coeffs(i);
}

}  // namespace srgeo::oracles
