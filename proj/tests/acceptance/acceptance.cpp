// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0
//
// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "beurling.hpp"
#include "growth.hpp"
#include "lanczos.hpp"
#include "series.hpp"
#include "simpson.hpp"
#include "special_functions.hpp"
#include "uniqueness.hpp"
#include "zeta_borwein.hpp"

namespace {

using gds::Complex;
using gds::Series;
using Clock = std::chrono::steady_clock;
constexpr double kPi = gds::kPi;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

std::string g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string run_cli(const std::string& args, int* code) {
  FILE* p = popen((std::string(GDS_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  std::string out;
  if (p == nullptr) {
    *code = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int st = pclose(p);
  *code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

void criterion1(Outcome& o) {
  for (const auto& [family, shape] : {std::pair{"zeta", "sinh_over_linear"}, std::pair{"shifted_zeta", "cosh"}}) {
    const auto t0 = Clock::now();
    int code = 0;
    const std::string out = run_cli(std::string("verify --builtin ") + family, &code);
    const double secs = seconds_since(t0);
    o.require(code == 0, std::string(family) + " exit " + std::to_string(code));
    if (code != 0 && out.empty()) continue;
    const auto j = nlohmann::json::parse(out);
    double diff = NAN;
    std::string best;
    for (const auto& c : j["checks"])
      if (c["id"] == "candidate_match") {
        diff = c["max_abs_log_diff"].get<double>();
        best = c["best"].get<std::string>();
      }
    o.detail << " " << family << ": " << best << " max|dlog|=" << g(diff) << " in " << g(secs) << " s;";
    o.require(best == shape, std::string(family) + " matched " + best);
    o.require(diff < 1e-8, std::string(family) + " discrepancy");
    o.require(secs < 60.0, std::string(family) + " runtime");
  }
}

void criterion2(Outcome& o) {
  const auto law = gds::asymptotic_constants(Series::riemann_zeta(), 1, 1e-12);
  // oracle zeta(0), zeta'(0): Borwein series with a five-point difference
  const double z0 = oracle::zeta_borwein(0.0).real();
  const double h = 1e-3;
  const auto zr = [](double s) { return oracle::zeta_borwein(s).real(); };
  const double dz0 = (zr(-2 * h) - 8 * zr(-h) + 8 * zr(h) - zr(2 * h)) / (12 * h);
  const double a_oracle = 2.0 * z0;
  const double b_oracle = std::exp(2.0 * dz0);
  o.detail << " a=" << g(law.a) << " b=" << g(law.b) << " m-pi=" << g(law.m - kPi) << " (oracle a=" << g(a_oracle)
           << " b=" << g(b_oracle) << ")";
  o.require(std::fabs(law.a + 1.0) <= 1e-8, "a");
  o.require(std::fabs(law.b - 1.0 / (2.0 * kPi)) <= 1e-8, "b");
  o.require(std::fabs(law.m - kPi) <= 1e-12, "m");
  o.require(std::fabs(law.a - a_oracle) <= 1e-8 && std::fabs(law.b - b_oracle) <= 1e-8, "oracle agreement");
}

void criterion3(Outcome& o) {
  const Series z = Series::riemann_zeta();
  const auto law = gds::asymptotic_constants(z, 1, 1e-12);
  const std::vector<double> xs{2, 4, 6};
  const auto pts = gds::decay_verification({z, 1}, law, xs);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double expect = -kPi * pts[i].x - std::log(2.0 * kPi * pts[i].x);
    o.detail << " x=" << g(pts[i].x) << ":" << g(pts[i].residual_log) << "(" << pts[i].method << ", want "
             << g(expect) << ")";
    o.require(std::fabs(pts[i].residual_log - expect) <= 0.1, "residual at x=" + g(pts[i].x));
    if (i > 0) {
      const double slope = (pts[i].residual_log - pts[i - 1].residual_log) / (pts[i].x - pts[i - 1].x);
      o.require(slope <= -(kPi - 0.1), "slope " + g(slope));
    }
  }
}

void criterion4(Outcome& o) {
  const auto t0 = Clock::now();
  std::vector<Complex> pts{0.5, 1.0, 1.5};
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> re(0.02, 1.98), im(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) pts.emplace_back(re(rng), im(rng));
  double worst = 0.0;
  for (const Complex s : pts) worst = std::max(worst, gds::mellin_identity_check(s, 1e-12).abs_diff);
  const double secs = seconds_since(t0);
  o.detail << " max|lhs-rhs|=" << g(worst) << " over " << pts.size() << " points in " << g(secs) << " s";
  o.require(worst < 1e-8, "identity");
  o.require(secs < 10.0, "runtime");
}

void criterion5(Outcome& o) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  bool degrees = true;
  for (int d = 1; d <= 4; ++d) {
    const double alpha = std::pow(2.0 * kPi, d) / (d + 0.5);
    gds::GrowthProfile p;
    for (double r = 5.0; r <= 40.0; r += 2.5)
      p.samples.push_back({r, 1.1 + d * oracle::lanczos_log_gamma(r).real() - r * std::log(alpha), 0.0});
    const auto inv = gds::fit_invariants(p, 4);
    degrees = degrees && inv.d == d;
    worst = std::max(worst, std::fabs(inv.alpha - alpha) / alpha);
  }
  o.detail << " synthetic max rel alpha err=" << g(worst) << ";";
  o.require(degrees && worst <= 1e-9, "synthetic recovery");

  const std::vector<double> grid{5, 8, 12, 16, 20};
  const auto fz = gds::fit_invariants(gds::max_modulus_profile(Series::riemann_zeta(), grid, 360, 1e-10), 4);
  const auto fk =
      gds::fit_invariants(gds::max_modulus_profile(Series::dedekind_quadratic(-4), grid, 360, 1e-10), 4);
  o.detail << " zeta d=" << fz.d << " alpha=" << g(fz.alpha) << " (2pi=" << g(2 * kPi) << ");"
           << " Q(i) d=" << fk.d << " alpha=" << g(fk.alpha) << " (pi^2=" << g(kPi * kPi) << ");";
  o.require(fz.d == 1, "zeta degree");
  o.require(std::fabs(fz.alpha - 2 * kPi) <= 0.1 * 2 * kPi, "zeta alpha within 10%");
  o.require(fk.d == 2, "Q(i) degree");
  o.require(std::fabs(fk.alpha - kPi * kPi) <= 0.2 * kPi * kPi, "Q(i) alpha within 20%");
  const double secs = seconds_since(t0);
  o.detail << " " << g(secs) << " s";
  o.require(secs < 300.0, "runtime");
}

void criterion6(Outcome& o) {
  gds::FunctionalEquationData fe;
  fe.Q = 1.0 / std::sqrt(kPi);
  fe.factors = {{0.5, 0.0}};
  const auto inv = gds::invariants_from_fe(fe);
  o.detail << " d=" << inv.d << " q-1=" << g(inv.q - 1.0) << " alpha-2pi=" << g(inv.alpha - 2 * kPi) << ";";
  o.require(inv.d == 1 && std::fabs(inv.q - 1.0) <= 1e-12 && std::fabs(inv.alpha - 2 * kPi) <= 1e-12,
            "zeta arithmetic");
  double worst = 0.0;
  for (const Series& s : {Series::riemann_zeta(), Series::dedekind_quadratic(-4), Series::dedekind_quadratic(5),
                          Series::dedekind_quadratic(-23)}) {
    const auto base = *gds::builtin_functional_equation(s);
    const auto a = gds::invariants_from_fe(base);
    const auto b = gds::invariants_from_fe(gds::duplicate_factor(base, 0));
    o.require(a.d == b.d, "degree under duplication");
    worst = std::max(worst, std::fabs(a.q - b.q) / a.q);
  }
  o.detail << " duplication max rel dq=" << g(worst);
  o.require(worst <= 1e-9, "duplication");
}

void criterion7(Outcome& o) {
  double max_ratio = 0.0, worst = 0.0;
  for (int sigma = 2; sigma <= 10; ++sigma) {
    const auto r = gds::gamma_ratio_bound_check(sigma, 40.0, 1e-10);
    o.require(std::isfinite(r.bound_ratio) && r.bound_ratio > 0.0, "ratio at sigma=" + std::to_string(sigma));
    max_ratio = std::max(max_ratio, r.bound_ratio);
    const double x = sigma + 2.0;
    const auto f = [x](double t) { return std::exp(oracle::lanczos_log_gamma({x, t}).real()); };
    const double ref = 2.0 * oracle::simpson(f, 0.0, r.t_cut, 200000);
    worst = std::max(worst, std::fabs(r.integral_value - ref) / ref);
  }
  o.detail << " max bound_ratio=" << g(max_ratio) << " Simpson max rel diff=" << g(worst);
  o.require(worst <= 1e-6, "Simpson agreement");
}

void criterion8(Outcome& o) {
  double wz = 0.0, wk = 0.0;
  const Series z = Series::riemann_zeta();
  for (int n = 1; n <= 5; ++n) wz = std::max(wz, std::abs(gds::evaluate(z, -2.0 * n, 1e-12).value));
  const Series K = Series::dedekind_quadratic(-4);
  for (int n = 1; n <= 2; ++n) wk = std::max(wk, std::abs(gds::evaluate(K, -4.0 * n, 1e-12).value));
  const auto report = gds::check_class_B(K, 2, 2, 1e-8);
  o.detail << " max|zeta(-2n)|=" << g(wz) << " max|zeta_K(-4n)|=" << g(wk);
  o.require(wz < 1e-10, "zeta");
  o.require(wk < 1e-8, "zeta_K");
  o.require(report.all_pass(), "class B axioms for Q(i)");
}

void criterion9(Outcome& o) {
  const auto m = gds::main_condition(2 * kPi, gds::residue_at_pole(Series::riemann_zeta(), 1e-12), 1);
  o.detail << " zeta margin-pi=" << g(m.margin - kPi) << ";";
  o.require(m.holds && std::fabs(m.margin - kPi) <= 1e-10, "main condition");
  const double rho = gds::residue_at_pole(Series::dedekind_quadratic(-4), 1e-12);
  const auto d = gds::dedekind_condition(4.0, 2, rho);
  o.detail << " Q(i) lhs=" << g(d.lhs) << " rhs=" << g(d.rhs) << " holds=" << d.holds << ";";
  o.require(!d.holds && std::fabs(d.lhs - 2.0) <= 1e-12 && std::fabs(d.rhs - 1.8006) <= 1e-4, "discriminant");
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> la(-2.0, 6.0), r(0.05, 3.0);
  std::uniform_int_distribution<int> deg(1, 4);
  int agree = 0;
  for (int i = 0; i < 100; ++i) {
    const int dd = deg(rng);
    const double alpha = std::exp(la(rng)), rr = r(rng);
    agree += gds::main_condition(alpha, rr, dd).holds ==
             gds::selberg_sharp_condition(std::pow(2 * kPi, dd) / alpha, rr, dd).holds;
  }
  o.detail << " equivalence " << agree << "/100";
  o.require(agree == 100, "equivalence");
}

void criterion10(Outcome& o) {
  const auto p = gds::psi_principal_parts(Series::riemann_zeta(), 1, 1e-12);
  const double z0 = oracle::zeta_borwein(0.0).real();
  o.detail << " lim s^2 psi=" << g(p.c_minus2_at_0) << " residue=" << g(p.residue_at_1);
  o.require(std::fabs(p.c_minus2_at_0 - 2.0 * z0) <= 1e-6 && std::fabs(p.c_minus2_at_0 + 1.0) <= 1e-6, "s^2 psi");
  o.require(std::fabs(p.residue_at_1 - kPi) <= 1e-6, "residue");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"Beurling closure for zeta and shifted zeta", criterion1},
      {"asymptotic constants for zeta", criterion2},
      {"decay law for zeta", criterion3},
      {"Mellin kernel identity", criterion4},
      {"invariant recovery from growth profiles", criterion5},
      {"functional-equation arithmetic", criterion6},
      {"gamma bound sweep", criterion7},
      {"trivial zeros", criterion8},
      {"uniqueness conditions", criterion9},
      {"psi principal parts", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failed += !o.pass;
    std::printf("%s criterion %2zu: %s:%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.str().c_str());
  }
  return failed;
}
