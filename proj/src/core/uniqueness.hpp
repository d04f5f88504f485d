// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <span>

#include "beurling.hpp"

namespace gds {

struct ConditionReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double margin = 0.0;  // positive exactly when the condition holds
};

/// alpha > (pi rho / sin(pi/2d))^d; margin = lhs - rhs.
ConditionReport main_condition(double alpha, double rho, int d);
/// q^{-1/d} > rho / (2 sin(pi/2d)); margin = lhs - rhs.
ConditionReport selberg_sharp_condition(double q, double rho, int d);
/// |disc|^{1/n} < 2 sin(pi/2n) / rho; margin = rhs - lhs.
ConditionReport dedekind_condition(double abs_disc, int n, double rho);

enum class Shape { SinhOverLinear, Cosh };

const char* shape_name(Shape shape);

struct CandidateForm {
  Shape shape = Shape::SinhOverLinear;
  double beta = 1.0;
};

/// sinh(beta z)/(beta z) and cosh(beta z).
std::array<CandidateForm, 2> candidate_forms(double beta);

double candidate_value(const CandidateForm& form, double x);
/// log of the form at real x, without overflow for large |beta x|.
double candidate_log_value(const CandidateForm& form, double x);

struct MatchResult {
  CandidateForm best;
  double max_abs_log_diff = 0.0;  // for `best`
  double sinh_distance = 0.0;
  double cosh_distance = 0.0;
  bool matched = false;      // best distance <= 1e-3
  bool exploratory = false;  // d >= 2
  int candidate_count = 0;   // 2d
};

/// Compares h(x) = f(x^d) with both forms at beta = law.rate over the grid.
MatchResult match_candidate(const BeurlingProduct& product, const AsymptoticLaw& law,
                            std::span<const double> x_grid);

}  // namespace gds
