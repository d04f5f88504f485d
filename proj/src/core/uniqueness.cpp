// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#include "uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "error.hpp"

namespace gds {

namespace {

constexpr double kNoMatchTolerance = 1e-3;

void check_positive(double v, const char* what) {
  require(std::isfinite(v) && v > 0.0, std::string(what) + " must be finite and > 0");
}

ConditionReport report(double lhs, double rhs, double margin) {
  return {lhs, rhs, margin > 0.0, margin};
}

}  // namespace

ConditionReport main_condition(double alpha, double rho, int d) {
  check_positive(alpha, "main_condition: alpha");
  check_positive(rho, "main_condition: rho");
  require(d >= 1, "main_condition: d must be >= 1");
  const double rhs = std::pow(kPi * rho / sin_pi(1.0 / (2.0 * d)), d);
  return report(alpha, rhs, alpha - rhs);
}

ConditionReport selberg_sharp_condition(double q, double rho, int d) {
  check_positive(q, "selberg_sharp_condition: q");
  check_positive(rho, "selberg_sharp_condition: rho");
  require(d >= 1, "selberg_sharp_condition: d must be >= 1");
  const double lhs = std::pow(q, -1.0 / d);
  const double rhs = rho / (2.0 * sin_pi(1.0 / (2.0 * d)));
  return report(lhs, rhs, lhs - rhs);
}

ConditionReport dedekind_condition(double abs_disc, int n, double rho) {
  require(std::isfinite(abs_disc) && abs_disc >= 1.0, "dedekind_condition: abs_disc must be >= 1");
  require(n >= 1, "dedekind_condition: n must be >= 1");
  check_positive(rho, "dedekind_condition: rho");
  const double lhs = std::pow(abs_disc, 1.0 / n);
  const double rhs = 2.0 * sin_pi(1.0 / (2.0 * n)) / rho;
  return report(lhs, rhs, rhs - lhs);
}

const char* shape_name(Shape shape) {
  return shape == Shape::SinhOverLinear ? "sinh_over_linear" : "cosh";
}

std::array<CandidateForm, 2> candidate_forms(double beta) {
  check_positive(beta, "candidate_forms: beta");
  return {CandidateForm{Shape::SinhOverLinear, beta}, CandidateForm{Shape::Cosh, beta}};
}

double candidate_value(const CandidateForm& form, double x) {
  const double z = form.beta * x;
  if (form.shape == Shape::Cosh) return std::cosh(z);
  if (std::fabs(z) < 1e-4) {
    const double z2 = z * z;
    return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sinh(z) / z;
}

double candidate_log_value(const CandidateForm& form, double x) {
  const double z = std::fabs(form.beta * x);
  if (z < 1.0) return std::log(candidate_value(form, x));
  const double e = std::exp(-2.0 * z);
  if (form.shape == Shape::Cosh) return z + std::log1p(e) - std::log(2.0);
  return z + std::log1p(-e) - std::log(2.0 * z);
}

MatchResult match_candidate(const BeurlingProduct& product, const AsymptoticLaw& law,
                            std::span<const double> x_grid) {
  require(!x_grid.empty(), "match_candidate: empty x grid");
  std::vector<double> grid(x_grid.begin(), x_grid.end());
  std::sort(grid.begin(), grid.end());
  require(grid.front() >= 1.0, "match_candidate: x grid values must be >= 1");
  const auto forms = candidate_forms(law.rate);
  MatchResult out;
  for (const double x : grid) {
    const double h = log_f(product, std::pow(x, product.d), 1e-12).value;
    out.sinh_distance =
        std::max(out.sinh_distance, std::fabs(h - candidate_log_value(forms[0], x)));
    out.cosh_distance =
        std::max(out.cosh_distance, std::fabs(h - candidate_log_value(forms[1], x)));
  }
  const bool sinh_wins = out.sinh_distance <= out.cosh_distance;
  out.best = sinh_wins ? forms[0] : forms[1];
  out.max_abs_log_diff = sinh_wins ? out.sinh_distance : out.cosh_distance;
  out.matched = out.max_abs_log_diff <= kNoMatchTolerance;
  out.exploratory = product.d >= 2;
  out.candidate_count = 2 * product.d;
  return out;
}

}  // namespace gds
