// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "error.hpp"
#include "special_functions.hpp"
#include "summation.hpp"

namespace gds {

struct CircleAverage {
  Complex value;
  double change = 0.0;  // |last estimate - previous estimate|
};

/// Trapezoid mean of f(z, e) over z = centre + r e, e = e^{i theta}, with the
/// node count doubled (old nodes reused) until two estimates differ < target.
/// Spectrally accurate for integrands analytic in an annulus around the circle.
template <typename F>
CircleAverage circle_average(F&& f, Complex centre, double r, double target,
                             int max_nodes = 1 << 14) {
  ComplexNeumaierSum sum;
  int count = 0;
  auto add_nodes = [&](int M, int start, int step) {
    for (int j = start; j < M; j += step) {
      const double frac = 2.0 * j / M;  // theta / pi
      const Complex e(cos_pi(frac), sin_pi(frac));
      sum += f(centre + r * e, e);
      ++count;
    }
  };
  int M = 16;
  add_nodes(M, 0, 1);
  Complex previous = sum.value() / static_cast<double>(count);
  while (M < max_nodes) {
    add_nodes(2 * M, 1, 2);
    M *= 2;
    const Complex current = sum.value() / static_cast<double>(count);
    const double change = std::abs(current - previous);
    if (change < target) return {current, change};
    previous = current;
  }
  fail(ErrorCode::NotConverged, "contour quadrature did not converge");
}

}  // namespace gds
