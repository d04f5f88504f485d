// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0
//
// Lanczos log-gamma (g = 7, 9 coefficients). Test-side reference only.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

inline std::complex<double> lanczos_log_gamma(std::complex<double> z) {
  using C = std::complex<double>;
  constexpr double pi = std::numbers::pi;
  static const double c[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                              771.32342877765313,   -176.61502916214059,   12.507343278686905,
                              -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // reflection; the branch of the imaginary part is not normalised
    return std::log(pi / std::sin(pi * z)) - lanczos_log_gamma(1.0 - z);
  }
  z -= 1.0;
  C x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
  const C t = z + 7.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline double lanczos_gamma(double x) { return std::exp(lanczos_log_gamma(x).real()); }

}  // namespace oracle
