// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"
#include "growth.hpp"
#include "lanczos.hpp"

using gds::Series;

namespace {

gds::GrowthProfile synthetic(int d, double alpha, double c) {
  gds::GrowthProfile p;
  for (double r = 5.0; r <= 40.0; r += 2.5)
    p.samples.push_back({r, c + d * oracle::lanczos_log_gamma(r).real() - r * std::log(alpha), 0.0});
  return p;
}

}  // namespace

TEST_CASE("exact synthetic profiles recover degree and conductor") {
  for (int d = 1; d <= 4; ++d) {
    const double alpha = std::pow(2.0 * gds::kPi, d) / (d + 0.5);
    const auto inv = gds::fit_invariants(synthetic(d, alpha, 0.37), 4);
    CHECK(inv.d == d);
    CHECK(std::fabs(inv.alpha - alpha) <= 1e-9 * alpha);
    CHECK(inv.q == doctest::Approx(std::pow(2.0 * gds::kPi, d) / alpha).epsilon(1e-9));
    CHECK(inv.fit_residual < 1e-9);
  }
  CHECK_THROWS_AS(gds::fit_invariants(gds::GrowthProfile{}, 4), gds::Error);
}

TEST_CASE("functional-equation arithmetic for zeta") {
  gds::FunctionalEquationData fe;
  fe.Q = 1.0 / std::sqrt(gds::kPi);
  fe.factors = {{0.5, 0.0}};
  const auto inv = gds::invariants_from_fe(fe);
  CHECK(inv.d == 1);
  CHECK(std::fabs(inv.q - 1.0) < 1e-12);
  CHECK(std::fabs(inv.alpha - 2.0 * gds::kPi) < 1e-12);
}

TEST_CASE("duplication leaves the invariants alone") {
  for (long long D : {-4LL, -3LL, 5LL, 12LL}) {
    const auto fe = gds::builtin_functional_equation(Series::dedekind_quadratic(D));
    REQUIRE(fe.has_value());
    const auto a = gds::invariants_from_fe(*fe);
    const auto dup = gds::duplicate_factor(*fe, 0);
    CHECK(dup.factors.size() == fe->factors.size() + 1);
    const auto b = gds::invariants_from_fe(dup);
    CHECK(a.d == b.d);
    CHECK(std::fabs(a.q - b.q) <= 1e-9 * a.q);
    CHECK(a.q == doctest::Approx(static_cast<double>(std::llabs(D))).epsilon(1e-12));
  }
}

TEST_CASE("non-integer degree") {
  gds::FunctionalEquationData fe;
  fe.factors = {{1.0 / 3.0, 0.0}};
  try {
    gds::invariants_from_fe(fe);
    FAIL("no throw");
  } catch (const gds::NonIntegerDegreeError& e) {
    CHECK(e.raw_degree() == doctest::Approx(2.0 / 3.0));
  }
}

TEST_CASE("functional-equation JSON") {
  const auto fe = gds::parse_fe_json(R"({"Q": 0.5641895835477563, "gamma_factors": [{"alpha": 0.5, "beta": [0, 0]}], "w": 1})");
  CHECK(gds::invariants_from_fe(fe).d == 1);
  CHECK_THROWS_AS(gds::parse_fe_json(R"({"Q": 1, "gamma_factors": [{"alpha": "x", "beta": 0}]})"), gds::Error);
  CHECK_THROWS_AS(gds::parse_fe_json("{"), gds::Error);
}

TEST_CASE("built-in functional equations and nominal invariants agree") {
  for (const Series& s : {Series::riemann_zeta(), Series::dedekind_quadratic(-4), Series::dedekind_quadratic(5)}) {
    const auto inv = gds::invariants_from_fe(*gds::builtin_functional_equation(s));
    const auto nom = *gds::nominal_invariants(s);
    CHECK(inv.d == nom.d);
    CHECK(inv.alpha == doctest::Approx(nom.alpha).epsilon(1e-12));
  }
  const auto sh = *gds::nominal_invariants(Series::shifted_zeta());
  CHECK(sh.d == 1);
  CHECK(sh.alpha == doctest::Approx(2.0 * gds::kPi));
}

TEST_CASE("max-modulus profile of zeta") {
  const std::vector<double> grid{5, 8, 12, 16, 20};
  const auto p = gds::max_modulus_profile(Series::riemann_zeta(), grid, 360, 1e-10);
  REQUIRE(p.samples.size() == grid.size());
  for (std::size_t i = 1; i < p.samples.size(); ++i) CHECK(p.samples[i].log_max > p.samples[i - 1].log_max);
  // the maximum is at least |zeta(-r)|
  for (const auto& s : p.samples) {
    const double at_neg = std::log(std::abs(gds::evaluate(Series::riemann_zeta(), -s.r, 1e-12).value) + 1e-300);
    CHECK(s.log_max >= at_neg - 1e-9);
  }
  const auto inv = gds::fit_invariants(p, 4);
  CHECK(inv.d == 1);
  CHECK(inv.lower_bound_heuristic_pass);
  const std::string csv = gds::profile_to_csv(p);
  CHECK(csv.rfind("r,logM,argmax_angle\n", 0) == 0);
}

TEST_CASE("profile of Q(i) fits degree 2") {
  const std::vector<double> grid{5, 8, 12, 16, 20};
  const auto p = gds::max_modulus_profile(Series::dedekind_quadratic(-4), grid, 360, 1e-10);
  CHECK(gds::fit_invariants(p, 4).d == 2);
}
