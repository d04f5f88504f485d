// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

namespace gds {

template <typename T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  bool converged = false;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::size_t max_intervals = 4000;
};

namespace detail {

inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (7-point rule).
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::fabs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }

template <typename T>
struct Panel {
  double a;
  double b;
  T value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename T, typename F>
Panel<T> gauss_kronrod_15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(centre);
  T kronrod = fc * kKronrodWeights[7];
  T gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const T sum = f(centre - dx) + f(centre + dx);
    kronrod += sum * kKronrodWeights[j];
    if (j % 2 == 1) gauss += sum * kGaussWeights[j / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, magnitude(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
/// The panel with the largest error estimate is bisected until the summed
/// estimate meets max(abs_tol, rel_tol*|I|) or the panel budget runs out.
template <typename T, typename F>
QuadratureResult<T> integrate(F&& f, double a, double b,
                              const QuadratureOptions& opts = {}) {
  QuadratureResult<T> result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  std::priority_queue<detail::Panel<T>> panels;
  panels.push(detail::gauss_kronrod_15<T>(f, a, b));
  result.evaluations = 15;
  T total = panels.top().value;
  double total_error = panels.top().error;
  while (true) {
    const double target =
        std::max(opts.abs_tol, opts.rel_tol * detail::magnitude(total));
    if (total_error <= target) {
      result.converged = true;
      break;
    }
    if (panels.size() >= opts.max_intervals) break;
    const auto worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // interval exhausted
    panels.pop();
    auto left = detail::gauss_kronrod_15<T>(f, worst.a, mid);
    auto right = detail::gauss_kronrod_15<T>(f, mid, worst.b);
    result.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  // Re-add from the panels to shed the drift of the running update.
  T sum{};
  double err = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  result.value = sum;
  result.error = err;
  return result;
}

}  // namespace gds
