// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>

#include "error.hpp"
#include "hurwitz.hpp"
#include "kronecker.hpp"
#include "kronecker_brute.hpp"
#include "series.hpp"
#include "series_io.hpp"
#include "zeta_borwein.hpp"

using gds::Complex;
using gds::Series;

namespace {
constexpr double kCatalan = 0.915965594177219015054603514932;
}

TEST_CASE("zeta against the Borwein oracle") {
  const Series z = Series::riemann_zeta();
  const Complex pts[] = {{2.0, 0.0}, {0.5, 14.134725}, {-5.0, 10.0}, {3.0, -7.0},
                         {-0.3, 0.2}, {0.75, 0.0},     {-7.5, 1.0},  {1.5, 40.0}};
  for (const Complex s : pts) {
    const auto v = gds::evaluate(z, s, 1e-12);
    const Complex ref = oracle::zeta_borwein(s);
    CHECK(std::abs(v.value - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
    CHECK(v.error <= 1e-12);
  }
}

TEST_CASE("zeta special values") {
  const Series z = Series::riemann_zeta();
  CHECK(gds::evaluate(z, 2.0, 1e-13).value.real() == doctest::Approx(gds::kPi * gds::kPi / 6.0).epsilon(1e-13));
  CHECK(gds::evaluate(z, 0.0, 1e-13).value.real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(gds::evaluate(z, -1.0, 1e-13).value.real() == doctest::Approx(-1.0 / 12.0).epsilon(1e-11));
  for (int n = 1; n <= 5; ++n) CHECK(std::abs(gds::evaluate(z, -2.0 * n, 1e-12).value) < 1e-10);
  CHECK(gds::derivative(z, 0.0, 1, 1e-12).value.real() ==
        doctest::Approx(-0.5 * gds::kLogTwoPi).epsilon(1e-11));
  CHECK(gds::residue_at_pole(z, 1e-12) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(gds::evaluate(z, 1.0, 1e-10), gds::Error);
  CHECK_THROWS_AS(gds::derivative(z, 1.2, 1, 1e-10), gds::Error);
}

TEST_CASE("shifted zeta is (2^s - 1) zeta(s)") {
  const Series sz = Series::shifted_zeta();
  CHECK(sz.terms_through(3).front().lambda == 0.5);
  for (const Complex s : {Complex(2.0, 0.0), Complex(0.3, 4.0), Complex(-3.5, 0.0)}) {
    const Complex ref = (std::pow(2.0, s) - 1.0) * oracle::zeta_borwein(s);
    CHECK(std::abs(gds::evaluate(sz, s, 1e-12).value - ref) < 1e-10 * std::max(1.0, std::abs(ref)));
  }
  CHECK(gds::evaluate(sz, 2.0, 1e-12).value.real() == doctest::Approx(gds::kPi * gds::kPi / 2.0).epsilon(1e-12));
  CHECK(gds::residue_at_pole(sz, 1e-12) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Kronecker symbol against factorisation and Euler's criterion") {
  for (long long D : {-3LL, -4LL, -7LL, -8LL, 5LL, 8LL, 12LL, -23LL, 13LL, -84LL}) {
    REQUIRE(gds::is_fundamental_discriminant(D));
    for (long long n = 1; n <= 300; ++n) CHECK(gds::kronecker_symbol(D, n) == oracle::kronecker(D, n));
  }
  CHECK_FALSE(gds::is_fundamental_discriminant(-16));
  CHECK_FALSE(gds::is_fundamental_discriminant(1));
  CHECK_FALSE(gds::is_fundamental_discriminant(18));
  CHECK_THROWS_AS(gds::kronecker_character(-16), gds::Error);
}

TEST_CASE("Dirichlet L and Dedekind zeta of Q(i)") {
  const auto chi = gds::kronecker_character(-4);
  CHECK(gds::dirichlet_l(1.0, chi, 1e-13).value.real() == doctest::Approx(gds::kPi / 4.0).epsilon(1e-12));
  CHECK(gds::dirichlet_l(2.0, chi, 1e-13).value.real() == doctest::Approx(kCatalan).epsilon(1e-12));
  // odd character: zeros at -1, -3, ...; L(-2, chi_{-4}) = E_2 / 2
  CHECK(std::abs(gds::dirichlet_l(-1.0, chi, 1e-12).value) < 1e-12);
  CHECK(std::abs(gds::dirichlet_l(-3.0, chi, 1e-12).value) < 1e-12);
  CHECK(gds::dirichlet_l(-2.0, chi, 1e-13).value.real() == doctest::Approx(-0.5).epsilon(1e-12));
  const Series K = Series::dedekind_quadratic(-4);
  CHECK(gds::evaluate(K, 2.0, 1e-13).value.real() ==
        doctest::Approx(gds::kPi * gds::kPi / 6.0 * kCatalan).epsilon(1e-12));
  CHECK(gds::residue_at_pole(K, 1e-12) == doctest::Approx(gds::kPi / 4.0).epsilon(1e-10));
  for (int n = 1; n <= 2; ++n) CHECK(std::abs(gds::evaluate(K, -4.0 * n, 1e-12).value) < 1e-8);
  // coefficients r(n)/4 for x^2 + y^2
  const auto t = K.terms_through(10);
  CHECK(t[0].a == 1.0);
  CHECK(t[1].lambda == 2.0);
  CHECK(t[1].a == 1.0);
  CHECK(t[2].lambda == 4.0);
  CHECK(t[3].lambda == 5.0);
  CHECK(t[3].a == 2.0);
}

TEST_CASE("tail power sums are consistent with partial sums") {
  const Series K = Series::dedekind_quadratic(-4);
  const double full = gds::evaluate(K, 3.0, 1e-14).value.real();
  for (long long N : {10LL, 100LL, 1000LL}) {
    const double head = K.partial_sum(3.0, N).real();
    CHECK(head + K.tail_power_sum(3.0, N, 1e-14).value.real() == doctest::Approx(full).epsilon(1e-12));
    CHECK(std::fabs(full - head) <= K.tail_abs_bound(3.0, N));
  }
}

TEST_CASE("class B report") {
  auto r = gds::check_class_B(Series::riemann_zeta(), 1, 5, 1e-10);
  CHECK(r.all_pass());
  CHECK(r.rho == doctest::Approx(1.0));
  REQUIRE(r.trivial_zero_residuals.size() == 5);
  for (double v : r.trivial_zero_residuals) CHECK(v < 1e-10);

  r = gds::check_class_B(Series::dedekind_quadratic(-4), 2, 2, 1e-8);
  CHECK(r.all_pass());

  r = gds::check_class_B(Series::dirichlet_l(gds::kronecker_character(-4)), 1, 2, 1e-8);
  CHECK_FALSE(r.all_pass());

  auto bad = Series::from_terms("two", {{1.0, 2.0}, {2.0, 1.0}}, std::nullopt);
  r = gds::check_class_B(bad, 1, 0, 1e-8);
  bool saw = false;
  for (const auto& a : r.axioms)
    if (a.id == "1.normalized") {
      saw = true;
      CHECK_FALSE(a.pass);
      CHECK(a.witness == "a_1=2");
    }
  CHECK(saw);
}

TEST_CASE("explicit series need a tail bound and Re(s) > 1") {
  gds::TailBound tb;
  tb.type = gds::TailBound::Type::IntegralTest;
  tb.C = 1.0;
  tb.kappa = 0.0;
  std::vector<gds::Term> terms;
  for (int n = 1; n <= 2000; ++n) terms.push_back({static_cast<double>(n), 1.0});
  const auto e = Series::from_terms("zeta head", terms, tb);
  const auto v = gds::evaluate(e, 4.0, 1e-8);
  CHECK(std::fabs(v.value.real() - std::pow(gds::kPi, 4) / 90.0) <= v.error + 1e-15);
  CHECK_THROWS_AS(gds::evaluate(e, 0.5, 1e-8), gds::Error);
  CHECK_THROWS_AS(gds::evaluate(e, 2.0, 1e-12), gds::Error);  // bound above tol
  const auto bare = Series::from_terms("bare", terms, std::nullopt);
  CHECK_THROWS_AS(gds::evaluate(bare, 3.0, 1e-8), gds::Error);
}

TEST_CASE("lambda merge adds coefficients on equal exponents") {
  const auto m = gds::to_lambda_merge(Series::riemann_zeta(), Series::shifted_zeta(), 1.0, 3.0);
  const auto& t = m.listed_terms();
  REQUIRE(t.size() == 6);
  CHECK(t[0].lambda == 0.5);
  CHECK(t[1].lambda == 1.0);
  CHECK(t.back().lambda == 3.0);
  const auto d = gds::to_lambda_merge(Series::riemann_zeta(), Series::riemann_zeta(), -1.0, 10.0);
  CHECK(d.listed_terms().empty());
  CHECK_FALSE(m.tail_descriptor().has_value());
}

TEST_CASE("series JSON: diagnostics and round trip") {
  try {
    gds::parse_series_json("{\n \"name\": \"x\",\n \"family\": \"explicit\",\n \"terms\": [[1, 1],\n}");
    FAIL("no throw");
  } catch (const gds::Error& e) {
    CHECK(e.code() == gds::ErrorCode::Schema);
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
  try {
    gds::parse_series_json(R"({"name":"x","family":"explicit","terms":[[1,1],[2,"a"]],
      "tail_bound":{"type":"geometric","params":{"C":1,"ratio":0.5,"sigma_min":1}}})");
    FAIL("no throw");
  } catch (const gds::Error& e) {
    CHECK(e.code() == gds::ErrorCode::Schema);
    CHECK(std::string(e.what()).find("/terms/1/1") != std::string::npos);
  }
  CHECK_THROWS_AS(gds::parse_series_json(R"({"name":"z","family":"riemann_zeta","colour":1})"), gds::Error);
  CHECK_THROWS_AS(gds::parse_series_json(R"({"name":"z","family":"riemann_zeta","terms":[[1,1]]})"),
                  gds::Error);

  const std::string text = R"({"name":"g","family":"explicit","terms":[[1,1],[2,0.5]],
    "tail_bound":{"type":"geometric","params":{"C":1,"ratio":0.5,"sigma_min":1}}})";
  const auto s = gds::parse_series_json(text);
  const std::string once = gds::series_to_json(s);
  CHECK(gds::series_to_json(gds::parse_series_json(once)) == once);

  const auto K = gds::parse_series_json(R"({"name":"K","family":"dedekind_quadratic","params":{"discriminant":-4}})");
  CHECK(K.family() == gds::Family::DedekindQuadratic);
  CHECK(K.discriminant() == -4);
  const auto L = gds::parse_series_json(
      R"({"name":"L4","family":"dirichlet_L","params":{"modulus":4,"values":[0,1,0,-1]}})");
  CHECK(gds::evaluate(L, 2.0, 1e-12).value.real() == doctest::Approx(kCatalan).epsilon(1e-12));
}
