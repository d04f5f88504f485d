// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "uniqueness.hpp"

using gds::Series;

TEST_CASE("main condition for zeta") {
  const auto c = gds::main_condition(2.0 * gds::kPi, 1.0, 1);
  CHECK(c.holds);
  CHECK(std::fabs(c.margin - gds::kPi) < 1e-10);
}

TEST_CASE("discriminant condition for Q(i)") {
  const auto c = gds::dedekind_condition(4.0, 2, gds::kPi / 4.0);
  CHECK_FALSE(c.holds);
  CHECK(c.lhs == doctest::Approx(2.0));
  CHECK(std::fabs(c.rhs - 1.8006) < 1e-4);
  CHECK(c.margin < 0.0);
}

TEST_CASE("sharp and main conditions are the same statement") {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> log_alpha(-2.0, 6.0), rho_d(0.05, 3.0);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int i = 0; i < 100; ++i) {
    const int d = deg(rng);
    const double alpha = std::exp(log_alpha(rng));
    const double rho = rho_d(rng);
    const double q = std::pow(2.0 * gds::kPi, d) / alpha;
    CHECK(gds::main_condition(alpha, rho, d).holds == gds::selberg_sharp_condition(q, rho, d).holds);
  }
  CHECK_THROWS_AS(gds::main_condition(-1.0, 1.0, 1), gds::Error);
}

TEST_CASE("candidate forms") {
  const auto f = gds::candidate_forms(gds::kPi);
  CHECK(gds::candidate_value(f[0], 0.0) == 1.0);
  CHECK(gds::candidate_value(f[1], 0.0) == 1.0);
  CHECK(gds::candidate_value(f[0], 1e-6) == doctest::Approx(1.0 + (gds::kPi * 1e-6) * (gds::kPi * 1e-6) / 6.0));
  CHECK(gds::candidate_log_value(f[1], 2.0) == doctest::Approx(std::log(std::cosh(2.0 * gds::kPi))));
  CHECK(std::isfinite(gds::candidate_log_value(f[0], 500.0)));
  CHECK(std::string(gds::shape_name(f[0].shape)) == "sinh_over_linear");
}

TEST_CASE("candidate matching") {
  std::vector<double> grid;
  for (double x = 1.0; x <= 6.0; x += 0.25) grid.push_back(x);
  const auto z = Series::riemann_zeta();
  const auto m = gds::match_candidate({z, 1}, gds::asymptotic_constants(z, 1, 1e-12), grid);
  CHECK(m.matched);
  CHECK(m.best.shape == gds::Shape::SinhOverLinear);
  CHECK(m.max_abs_log_diff < 1e-8);
  CHECK(m.candidate_count == 2);
  const auto sz = Series::shifted_zeta();
  const auto ms = gds::match_candidate({sz, 1}, gds::asymptotic_constants(sz, 1, 1e-12), grid);
  CHECK(ms.best.shape == gds::Shape::Cosh);
  CHECK(ms.max_abs_log_diff < 1e-8);
  const auto K = Series::dedekind_quadratic(-4);
  const auto mk = gds::match_candidate({K, 2}, gds::asymptotic_constants(K, 2, 1e-12), grid);
  CHECK(mk.exploratory);
  CHECK(mk.candidate_count == 4);
}
