// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <numbers>

namespace gds {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kLogTwoPi = 1.8378770664093454835606594728112;

/// Bernoulli number B_{2k} for 1 <= k <= 12.
double bernoulli_even(int k);

/// sin(pi x) and cos(pi x) with exact zeros at integers / half-integers.
double sin_pi(double x);
double cos_pi(double x);
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

/// log sin(pi z) that stays finite for large |Im z| where sin itself overflows.
/// Agrees with sin_pi(z) after exponentiation; the imaginary part is not
/// reduced to (-pi, pi].
Complex log_sin_pi(Complex z);

/// (e^z - 1)/z, accurate near z = 0.
Complex exprel(Complex z);

/// Analytic continuation of log Gamma along paths avoiding the negative real
/// axis (real on the positive reals). Throws Pole within 1e-14 of 0,-1,-2,...
/// For Re(s) < 1/2 the reflection formula is used, so the imaginary part may
/// differ from the analytic branch by a multiple of 2 pi; exp() is unaffected.
Complex log_gamma(Complex s);
double log_gamma(double s);
Complex gamma(Complex s);

/// Truncated Stirling series (z - 1/2)log z - z + log(2 pi)/2 + sum of
/// `terms` Bernoulli corrections. Requires s >= 2 and 1 <= terms <= 10.
double stirling_log_gamma(double s, int terms);
/// Magnitude of the first omitted Stirling term, which bounds the error.
double stirling_error_bound(double s, int terms);

/// Result of integrating |Gamma(sigma + 2 + i t)| over the whole real line.
struct GammaBoundReport {
  double sigma = 0.0;
  double t_cut = 0.0;           // half-width actually integrated numerically
  double integral_value = 0.0;  // quadrature over [-t_cut, t_cut]
  double quadrature_error = 0.0;
  double tail_bound = 0.0;  // bound on the contribution from |t| > t_cut
  double bound_ratio = 0.0;  // integral_value / (sigma^3 Gamma(sigma))
};

/// Integrates |Gamma(sigma + 2 + it)| over |t| <= t_cut by adaptive
/// quadrature and bounds the rest with the Stirling majorant
/// K t^{sigma + 3/2} e^{-t}; t_cut is widened until the tail is below
/// quad_tol * max(1, integral). Throws NotConverged when the quadrature
/// budget is exhausted.
GammaBoundReport gamma_ratio_bound_check(double sigma, double t_cut,
                                         double quad_tol);

/// Majorant constant K(x) with |Gamma(x + it)| <= K(x) |t|^{x - 1/2} e^{-|t|}
/// for |t| >= 2x, x >= 1/2.
double gamma_tail_majorant_constant(double x);

}  // namespace gds
