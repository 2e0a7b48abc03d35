#include "srgeo/core/timegrid.hpp"

#include "srgeo/core/error.hpp"

namespace srgeo {

Stencil derivativeStencil(int i, int count) {
  if (count < 5) throw DimensionError("time derivative needs at least five samples");
  Stencil s;
  auto set = [&](int first, double a, double b, double c, double d, double e) {
    s.first = first;
    const double w[5] = {a / 12.0, b / 12.0, c / 12.0, d / 12.0, e / 12.0};
    for (int k = 0; k < 5; ++k) s.weights[k] = w[k];
  };
  if (i == 0) {
    set(0, -25.0, 48.0, -36.0, 16.0, -3.0);
  } else if (i == 1) {
    set(0, -3.0, -10.0, 18.0, -6.0, 1.0);
  } else if (i == count - 2) {
    set(count - 5, -1.0, 6.0, -18.0, 10.0, 3.0);
  } else if (i == count - 1) {
    set(count - 5, 3.0, -16.0, 36.0, -48.0, 25.0);
  } else {
    set(i - 2, 1.0, -8.0, 0.0, 8.0, -1.0);
  }
  return s;
}

std::vector<double> timeDerivative(std::span<const double> f, double dt) {
  const int n = static_cast<int>(f.size());
  std::vector<double> d(f.size());
  for (int i = 0; i < n; ++i) {
    const Stencil s = derivativeStencil(i, n);
    double acc = 0.0;
    for (int k = 0; k < 5; ++k) acc += s.weights[k] * f[s.first + k];
    d[i] = acc / dt;
  }
  return d;
}

std::vector<double> timeDerivativeAt(const std::vector<std::vector<double>>& series, int i,
                                     double dt) {
  const Stencil s = derivativeStencil(i, static_cast<int>(series.size()));
  std::vector<double> d(series[i].size(), 0.0);
  for (int k = 0; k < 5; ++k) {
    const auto& row = series[s.first + k];
    for (std::size_t j = 0; j < d.size(); ++j) d[j] += s.weights[k] * row[j];
  }
  for (double& v : d) v /= dt;
  return d;
}

std::vector<double> cumulativeIntegral(std::span<const double> f, double dt) {
  const int n = static_cast<int>(f.size());
  std::vector<double> w(f.size(), 0.0);
  if (n < 4) {
    for (int i = 1; i < n; ++i) w[i] = w[i - 1] + 0.5 * dt * (f[i - 1] + f[i]);
    return w;
  }
  const double c = dt / 24.0;
  for (int i = 0; i + 1 < n; ++i) {
    double inc;
    if (i == 0) {
      inc = 9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3];
    } else if (i == n - 2) {
      inc = 9.0 * f[n - 1] + 19.0 * f[n - 2] - 5.0 * f[n - 3] + f[n - 4];
    } else {
      inc = -f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2];
    }
    w[i + 1] = w[i] + c * inc;
  }
  return w;
}

std::vector<double> midpointValue(const std::vector<std::vector<double>>& series, int i) {
  const int n = static_cast<int>(series.size());
  if (i < 0 || i + 1 >= n) throw DimensionError("midpointValue: interval outside series");
  int first;
  double w[4];
  if (n < 4) {
    std::vector<double> r(series[i].size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = 0.5 * (series[i][j] + series[i + 1][j]);
    return r;
  }
  if (i == 0) {
    first = 0;
    w[0] = 5.0 / 16; w[1] = 15.0 / 16; w[2] = -5.0 / 16; w[3] = 1.0 / 16;
  } else if (i == n - 2) {
    first = n - 4;
    w[0] = 1.0 / 16; w[1] = -5.0 / 16; w[2] = 15.0 / 16; w[3] = 5.0 / 16;
  } else {
    first = i - 1;
    w[0] = -1.0 / 16; w[1] = 9.0 / 16; w[2] = 9.0 / 16; w[3] = -1.0 / 16;
  }
  std::vector<double> r(series[i].size(), 0.0);
  for (int k = 0; k < 4; ++k) {
    const auto& row = series[first + k];
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += w[k] * row[j];
  }
  return r;
}

}  // namespace srgeo
