// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "series.hpp"

namespace gds {

/// f(z) = prod_n (1 + z^2 / lambda_n^{2d})^{a_n}.
struct BeurlingProduct {
  Series base;
  int d = 1;
};

struct LogFValue {
  double value = 0.0;
  double error = 0.0;   // certified bound on the truncation remainder
  long long trunc_N = 0;  // terms summed directly
};

/// log f(x) as sum a_n log(1 + x^2/lambda_n^{2d}). Built-in families: the
/// first N terms directly, the rest as x^2 T_1 - x^4 T_2 / 2 with exact tail
/// power sums T_k and remainder <= x^6 T_3 / 3. Explicit series: listed terms
/// plus x^2 times the tail bound at sigma = 2d. Even in x.
LogFValue log_f(const BeurlingProduct& product, double x, double tol);

/// psi(s) = (pi d / (s sin(pi s / 2d))) g(s) on Re(s) < 2d minus {0, 1}.
/// Within 0.01 of a trivial zero -2nd the quotient g(s)/(s + 2nd) is taken as
/// a Cauchy divided difference, which needs g(-2nd) = 0.
Complex psi(const Series& series, int d, Complex s, double tol);

struct PrincipalParts {
  double c_minus2_at_0 = 0.0;  // lim s^2 psi(s)
  double c_minus1_at_0 = 0.0;
  double residue_at_1 = 0.0;
  double expected_c_minus2 = 0.0;  // 2 d^2 g(0)
  double expected_c_minus1 = 0.0;  // 2 d^2 g'(0)
  double expected_residue = 0.0;   // pi rho d / sin(pi / 2d)
};

/// Laurent coefficients of psi from contours of radius 1/4 around 0 and 1.
PrincipalParts psi_principal_parts(const Series& series, int d, double tol);

struct MellinCheck {
  Complex lhs;
  Complex rhs;
  double abs_diff = 0.0;
  double quadrature_error = 0.0;
};

/// int_0^inf log(1 + x^2) x^{-1-s} dx against pi / (s sin(pi s / 2)),
/// 0 < Re(s) < 2. Adaptive Gauss-Kronrod on [1/2, 1] and [1, 2]; the power
/// series of log(1 + x^2) and of log(1 + x^{-2}) integrate the ends exactly.
MellinCheck mellin_identity_check(Complex s, double quad_tol);

struct AsymptoticLaw {
  int d = 1;
  // constants of the law b x^a e^{m x^{1/d}}
  double a = 0.0;  // 2 d g(0)
  double b = 0.0;  // exp(2 d^2 g'(0))
  double m = 0.0;  // pi rho d / sin(pi / 2d)
  double delta_margin = 0.0;  // d alpha^{1/d} - rate
  // inputs
  double g0 = 0.0;
  double g1 = 0.0;
  double rho = 0.0;
  double alpha = 0.0;  // nominal conductor, NaN when unknown
  // Residues of psi(s) x^{s/d} / d at 1 and 0, i.e. the law in the form
  // log f(x) ~ rate x^{1/d} + power log x + log_scale. At d = 1 these are
  // m, a and log b; in general m/d, a/d and (log b)/d.
  double rate = 0.0;
  double power = 0.0;
  double log_scale = 0.0;
  double tol = 0.0;  // tolerance the inputs were computed to

  double log_model(double x) const;
};

AsymptoticLaw asymptotic_constants(const Series& series, int d, double tol);

struct DecayPoint {
  double x = 0.0;
  double log_f = 0.0;
  double log_model = 0.0;
  double residual_log = 0.0;  // log |f(x) - model(x)|; NaN when unavailable
  bool cancellation_flag = false;
  std::string method;  // "direct", "contour" or "unavailable"
};

/// residual_log = log f + log|expm1(log model - log f)| while the two logs are
/// resolvable (|difference| above e^{-30}, rounding, and the uncertainty of
/// the law's constants). Past that
/// point the flag is raised and, for d = 1 with principal parts matching the
/// law, log f - log model is recomputed as the inverse Mellin integral of psi
/// on a line Re(s) = c < 0 left of both poles.
std::vector<DecayPoint> decay_verification(const BeurlingProduct& product,
                                           const AsymptoticLaw& law,
                                           std::span<const double> x_grid);

/// log f(x) - log model(x) via the shifted inversion integral (d = 1 only).
CertifiedValue contour_error_term(const Series& series, int d, double x, double tol);

}  // namespace gds
