// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "series.hpp"

namespace gds {

struct GammaFactor {
  double alpha = 0.0;
  Complex beta = 0.0;
};

/// Phi(s) = Q^s prod Gamma(alpha_i s + beta_i) F(s) = w conj(Phi(1 - conj s)).
struct FunctionalEquationData {
  double Q = 1.0;
  std::vector<GammaFactor> factors;
  Complex w = 1.0;
};

struct ProfileSample {
  double r = 0.0;
  double log_max = 0.0;  // log max_{|s|=r} |F(s)|
  double argmax_angle = 0.0;  // in (-pi, pi]
};

struct GrowthProfile {
  std::vector<ProfileSample> samples;
  int angular_resolution = 0;
  std::vector<std::string> skipped;  // sample points that could not be evaluated
};

struct GrowthInvariants {
  int d = 0;
  double alpha = 0.0;
  double q = 0.0;
  double fit_residual = 0.0;  // RMS, zero for functional-equation input
  std::vector<double> r_grid;
  // Empirical stand-in for the lower half of the growth condition: RMS
  // residual with alpha replaced by 1.2 alpha (intercept refitted), and its
  // ratio to fit_residual. Heuristic, not a certificate.
  double perturbed_residual = 0.0;
  double residual_ratio = 0.0;
  bool lower_bound_heuristic_pass = false;
};

/// Samples |F| at angular_resolution equispaced points on each circle |s| = r,
/// refines the best one by golden-section search down to 1e-6 rad.
GrowthProfile max_modulus_profile(const Series& series, std::span<const double> r_grid,
                                  int angular_resolution, double tol);

/// Least-squares fit of log M(r) - d log Gamma(r) = c - r log alpha for each
/// d in [1, d_max]; the d with the smallest RMS residual wins.
GrowthInvariants fit_invariants(const GrowthProfile& profile, int d_max);

/// d = 2 sum alpha_i, q = (2 pi)^d Q^2 prod alpha_i^{2 alpha_i}, alpha = (2 pi)^d / q.
/// Throws NonIntegerDegreeError when d is not a positive integer within 1e-9.
GrowthInvariants invariants_from_fe(const FunctionalEquationData& fe);

/// Replaces factor `index` (alpha, beta) by (alpha/2, beta/2), (alpha/2, (beta+1)/2)
/// via Legendre duplication, scaling Q by 2^alpha.
FunctionalEquationData duplicate_factor(const FunctionalEquationData& fe, std::size_t index);

/// Functional equation of a built-in family, when it has a standard one
/// (Dirichlet characters are taken to be primitive with root number 1).
std::optional<FunctionalEquationData> builtin_functional_equation(const Series& series);

struct NominalInvariants {
  int d = 0;
  double alpha = 0.0;
  double q = 0.0;
};

/// Known (d, alpha, q) of a built-in family; (2^s - 1) zeta(s) shares those
/// of zeta(s).
std::optional<NominalInvariants> nominal_invariants(const Series& series);

/// { "Q": x, "gamma_factors": [{"alpha": a, "beta": b | [re, im]}, ...],
///   "w": x | [re, im] }. Throws Error(Schema) with the offending field.
FunctionalEquationData parse_fe_json(const std::string& text);

/// Columns r, logM, argmax_angle.
std::string profile_to_csv(const GrowthProfile& profile);

}  // namespace gds
