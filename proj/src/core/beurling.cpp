// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#include "beurling.hpp"

#include <cmath>
#include <limits>

#include "contour.hpp"
#include "error.hpp"
#include "growth.hpp"
#include "quadrature.hpp"
#include "summation.hpp"

namespace gds {

namespace {

constexpr long long kMaxProductTerms = 1LL << 24;
constexpr double kTrivialZeroWindow = 0.01;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_degree(int d) { require(d >= 1 && d <= 4, "degree d must be in [1, 4]"); }

Complex sinc(Complex w) {
  if (std::abs(w) < 1e-3) {
    const Complex w2 = w * w;
    return 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
  }
  return std::sin(w) / w;
}

}  // namespace

LogFValue log_f(const BeurlingProduct& product, double x, double tol) {
  check_degree(product.d);
  require(std::isfinite(x), "log_f: x must be finite");
  require(std::isfinite(tol) && tol > 0.0, "log_f: tol must be > 0");
  const double x2 = x * x;
  if (x2 == 0.0) return {};
  const int d = product.d;
  const Series& series = product.base;
  auto log_term = [&](const Term& t) {
    return t.a * std::log1p(x2 / std::pow(t.lambda, 2.0 * d));
  };

  if (!series.has_continuation()) {
    const auto& tail = series.tail_descriptor();
    if (!tail || !tail->valid_at(2.0 * d)) {
      fail(ErrorCode::InvalidArgument,
           "log_f: tail bound unavailable for series '" + series.name() + "' at sigma = 2d");
    }
    const auto& terms = series.listed_terms();
    NeumaierSum sum;
    for (const auto& t : terms) sum += log_term(t);
    // log(1 + u) <= u
    const double err = x2 * tail->bound(2.0 * d, terms.empty() ? 1.0 : terms.back().lambda);
    if (err > tol) {
      fail(ErrorCode::NotConverged, "log_f: tail bound exceeds tolerance");
    }
    return {sum.value(), err, static_cast<long long>(terms.size())};
  }

  // 0 <= log(1+u) - u + u^2/2 <= u^3/3 for u >= 0
  long long N = 16;
  auto remainder = [&](long long n) {
    return x2 * x2 * x2 * series.tail_abs_bound(6.0 * d, n) / 3.0;
  };
  while (remainder(N) > 0.25 * tol) {
    if (N >= kMaxProductTerms) {
      fail(ErrorCode::NotConverged, "log_f: truncation exceeded 2^24 terms");
    }
    N *= 2;
  }
  NeumaierSum sum;
  for (const auto& t : series.terms_through(N)) sum += log_term(t);
  const auto t1 = series.tail_power_sum(2.0 * d, N, 0.25 * tol / x2);
  const auto t2 = series.tail_power_sum(4.0 * d, N, 0.5 * tol / (x2 * x2));
  sum += x2 * t1.value.real();
  sum += -0.5 * x2 * x2 * t2.value.real();
  const double err = remainder(N) + x2 * t1.error + 0.5 * x2 * x2 * t2.error;
  return {sum.value(), err, N};
}

Complex psi(const Series& series, int d, Complex s, double tol) {
  check_degree(d);
  require(std::isfinite(tol) && tol > 0.0, "psi: tol must be > 0");
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    fail(ErrorCode::InvalidArgument, "psi: non-finite s");
  }
  if (s.real() >= 2.0 * d) {
    fail(ErrorCode::UnsupportedRegion, "psi: requires Re(s) < 2d");
  }
  if (std::abs(s) <= 1e-10) fail(ErrorCode::Pole, "psi: pole at s = 0");
  if (std::abs(s - 1.0) <= 1e-10) fail(ErrorCode::Pole, "psi: pole at s = 1");

  const double two_d = 2.0 * d;
  const double n = std::round(-s.real() / two_d);
  const Complex s0(-two_d * n, 0.0);
  if (n >= 1.0 && std::abs(s - s0) < kTrivialZeroWindow) {
    // g(s)/sin(pi s/2d) = (-1)^n (2d/pi) G / sinc(pi h/2d), h = s - s0,
    // G = (g(s) - g(s0)) / h from Cauchy's formula on |z - s0| = 1/2.
    const auto g_s0 = evaluate(series, s0, 1e-12);
    if (std::abs(g_s0.value) > 1e-8) {
      fail(ErrorCode::Pole, "psi: g(" + std::to_string(s0.real()) +
                                ") != 0, so psi has a pole there");
    }
    const Complex h = s - s0;
    const double sign = std::fmod(n, 2.0) == 0.0 ? 1.0 : -1.0;
    const Complex factor = sign * 2.0 * d * d / (s * sinc(kPi * h / two_d));
    const double target = 0.25 * tol / std::abs(factor);
    const auto G = circle_average(
        [&](Complex z, Complex) {
          return evaluate(series, z, std::max(target, 1e-16)).value / (z - s);
        },
        s0, 0.5, target);
    return factor * G.value;
  }
  const Complex prefactor = kPi * d / (s * sin_pi(s / two_d));
  const auto g = evaluate(series, s, std::max(tol / std::abs(prefactor), 1e-16));
  return prefactor * g.value;
}

PrincipalParts psi_principal_parts(const Series& series, int d, double tol) {
  check_degree(d);
  require(std::isfinite(tol) && tol > 0.0, "psi_principal_parts: tol must be > 0");
  constexpr double r = 0.25;
  PrincipalParts pp;
  // (1/2 pi i) \oint psi(z) z^k dz on |z| = r is the mean of psi(z) z^{k+1}.
  const auto c2 = circle_average(
      [&](Complex z, Complex) { return psi(series, d, z, 0.1 * tol) * z * z; }, 0.0, r,
      0.5 * tol);
  const auto c1 = circle_average(
      [&](Complex z, Complex) { return psi(series, d, z, 0.1 * tol) * z; }, 0.0, r,
      0.5 * tol);
  const auto res = circle_average(
      [&](Complex z, Complex) { return psi(series, d, z, 0.1 * tol) * (z - 1.0); }, 1.0, r,
      0.5 * tol);
  pp.c_minus2_at_0 = c2.value.real();
  pp.c_minus1_at_0 = c1.value.real();
  pp.residue_at_1 = res.value.real();

  const double g0 = evaluate(series, 0.0, 0.1 * tol).value.real();
  const double g1 = derivative(series, 0.0, 1, 0.1 * tol).value.real();
  const double rho = residue_at_pole(series, 0.1 * tol);
  pp.expected_c_minus2 = 2.0 * d * d * g0;
  pp.expected_c_minus1 = 2.0 * d * d * g1;
  pp.expected_residue = kPi * rho * d / sin_pi(1.0 / (2.0 * d));
  return pp;
}

MellinCheck mellin_identity_check(Complex s, double quad_tol) {
  require(s.real() > 0.0 && s.real() < 2.0, "mellin_identity_check: requires 0 < Re(s) < 2");
  require(std::isfinite(s.imag()), "mellin_identity_check: non-finite s");
  require(std::isfinite(quad_tol) && quad_tol > 0.0, "mellin_identity_check: quad_tol must be > 0");
  constexpr double lo = 0.5;
  constexpr double hi = 2.0;
  ComplexNeumaierSum lhs;

  // [0, lo]: log(1 + x^2) = sum (-1)^{k+1} x^{2k} / k
  const double log_lo = std::log(lo);
  for (int k = 1; k < 200; ++k) {
    const Complex e = 2.0 * k - s;
    const Complex term = (k % 2 == 1 ? 1.0 : -1.0) * std::exp(e * log_lo) / (static_cast<double>(k) * e);
    lhs += term;
    if (std::abs(term) < 1e-3 * quad_tol) break;
  }
  // [hi, inf): log(1 + x^2) = 2 log x + sum (-1)^{k+1} x^{-2k} / k
  const double log_hi = std::log(hi);
  const Complex hi_pow = std::exp(-s * log_hi);
  lhs += 2.0 * hi_pow * (log_hi / s + 1.0 / (s * s));
  for (int k = 1; k < 200; ++k) {
    const Complex e = 2.0 * k + s;
    const Complex term = (k % 2 == 1 ? 1.0 : -1.0) * std::exp(-e * log_hi) / (static_cast<double>(k) * e);
    lhs += term;
    if (std::abs(term) < 1e-3 * quad_tol) break;
  }

  auto integrand = [s](double x) {
    return std::log1p(x * x) * std::exp((-1.0 - s) * std::log(x));
  };
  QuadratureOptions opts;
  opts.abs_tol = 0.25 * quad_tol;
  opts.rel_tol = 0.25 * quad_tol;
  const auto left = integrate<Complex>(integrand, lo, 1.0, opts);
  const auto right = integrate<Complex>(integrand, 1.0, hi, opts);
  if (!left.converged || !right.converged) {
    fail(ErrorCode::NotConverged, "mellin_identity_check: quadrature did not converge");
  }
  lhs += left.value;
  lhs += right.value;

  MellinCheck out;
  out.lhs = lhs.value();
  out.rhs = kPi / (s * sin_pi(0.5 * s));
  out.abs_diff = std::abs(out.lhs - out.rhs);
  out.quadrature_error = left.error + right.error;
  return out;
}

double AsymptoticLaw::log_model(double x) const {
  return rate * std::pow(x, 1.0 / d) + power * std::log(x) + log_scale;
}

AsymptoticLaw asymptotic_constants(const Series& series, int d, double tol) {
  check_degree(d);
  require(series.has_continuation(), "asymptotic_constants: requires a built-in family");
  require(std::isfinite(tol) && tol > 0.0, "asymptotic_constants: tol must be > 0");
  AsymptoticLaw law;
  law.d = d;
  law.tol = tol;
  law.g0 = evaluate(series, 0.0, tol).value.real();
  law.g1 = derivative(series, 0.0, 1, tol).value.real();
  law.rho = residue_at_pole(series, tol);
  law.a = 2.0 * d * law.g0;
  law.b = std::exp(2.0 * d * d * law.g1);
  law.m = kPi * law.rho * d / sin_pi(1.0 / (2.0 * d));
  law.rate = law.m / d;
  law.power = 2.0 * law.g0;
  law.log_scale = 2.0 * d * law.g1;
  const auto nominal = nominal_invariants(series);
  law.alpha = nominal ? nominal->alpha : std::numeric_limits<double>::quiet_NaN();
  law.delta_margin = d * std::pow(law.alpha, 1.0 / d) - law.rate;
  return law;
}

CertifiedValue contour_error_term(const Series& series, int d, double x, double tol) {
  check_degree(d);
  require(x >= 1.0, "contour_error_term: requires x >= 1");
  const double log_x = std::log(x);
  // Line Re(s) = c at an odd multiple of -d, where |sin(pi s/2d)| = 1 and no
  // pole of psi lies between c and 0; pick the one with smallest |psi(c)| x^{c/d}.
  double best_c = -d;
  double best_log = std::numeric_limits<double>::infinity();
  for (int n = 0; n < 64; ++n) {
    const double c = -(2.0 * n + 1.0) * d;
    if (c < -120.0) break;
    const double v = std::abs(psi(series, d, c, 1e-12));
    if (v == 0.0) continue;
    const double lv = std::log(v) + c / d * log_x;
    if (lv < best_log) {
      best_log = lv;
      best_c = c;
    }
  }
  const double scale = std::exp(best_log);
  const double psi_scale = scale / std::exp(best_c / d * log_x);
  auto integrand = [&](double t) {
    const Complex s(best_c, t);
    return (psi(series, d, s, 1e-9 * psi_scale) * std::exp(s / static_cast<double>(d) * log_x))
        .real();
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-3 * tol * scale;
  opts.rel_tol = 1e-10;
  NeumaierSum total;
  double err = 0.0;
  constexpr double width = 4.0;
  for (int k = 0; k < 100; ++k) {
    const auto piece = integrate<double>(integrand, k * width, (k + 1) * width, opts);
    if (!piece.converged) {
      fail(ErrorCode::NotConverged, "contour_error_term: quadrature did not converge");
    }
    total += piece.value;
    err += piece.error;
    if (k >= 2 && std::fabs(piece.value) < 1e-3 * tol * scale) break;
    if (k == 99) fail(ErrorCode::NotConverged, "contour_error_term: integrand did not decay");
  }
  const double norm = 1.0 / (kPi * d);
  return {norm * total.value(), norm * err};
}

std::vector<DecayPoint> decay_verification(const BeurlingProduct& product,
                                           const AsymptoticLaw& law,
                                           std::span<const double> x_grid) {
  require(!x_grid.empty(), "decay_verification: empty x grid");
  require(law.d == product.d, "decay_verification: law and product degrees differ");
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    require(std::isfinite(x_grid[i]) && x_grid[i] >= 1.0,
            "decay_verification: x grid values must be >= 1");
    if (i > 0) require(x_grid[i] > x_grid[i - 1], "decay_verification: x grid must increase");
  }
  int contour_ok = -1;  // unknown until the first flagged point
  std::vector<DecayPoint> out;
  for (const double x : x_grid) {
    DecayPoint p;
    p.x = x;
    const auto lf = log_f(product, x, 1e-14);
    p.log_f = lf.value;
    p.log_model = law.log_model(x);
    const double delta = p.log_f - p.log_model;
    const double law_error = 4.0 * law.tol * (1.0 + std::log(x) + std::pow(x, 1.0 / law.d));
    const double floor = std::max(
        std::exp(-30.0),
        64.0 * kEps * (std::fabs(p.log_f) + std::fabs(p.log_model) + 1.0) + lf.error + law_error);
    if (std::fabs(delta) > floor) {
      // f - model = -f expm1(-delta)
      p.residual_log = p.log_f + std::log(std::fabs(std::expm1(-delta)));
      p.method = "direct";
    } else {
      p.cancellation_flag = true;
      if (contour_ok < 0) {
        contour_ok = 0;
        if (product.d == 1) {
          const auto pp = psi_principal_parts(product.base, product.d, 1e-9);
          const bool match = std::fabs(pp.c_minus2_at_0 - law.d * law.a) < 1e-6 &&
                             std::fabs(pp.c_minus1_at_0 - law.d * law.log_scale) < 1e-6 &&
                             std::fabs(pp.residue_at_1 - law.m) < 1e-6;
          contour_ok = match ? 1 : 0;
        }
      }
      if (contour_ok == 1) {
        const auto e = contour_error_term(product.base, product.d, x, 1e-6);
        p.residual_log = p.log_model + std::log(std::fabs(std::expm1(e.value.real())));
        p.method = "contour";
      } else {
        p.residual_log = std::numeric_limits<double>::quiet_NaN();
        p.method = "unavailable";
      }
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace gds
