// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#include "special_functions.hpp"

#include <array>
#include <cmath>
#include <string>

#include "error.hpp"
#include "quadrature.hpp"
#include "summation.hpp"

namespace gds {

namespace {

constexpr std::array<double, 13> kBernoulliEven = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
};

// Below this modulus the argument is shifted up by the recurrence before the
// Stirling series is applied.
constexpr double kStirlingThreshold = 15.0;
constexpr int kStirlingTerms = 10;
constexpr double kPoleTolerance = 1e-14;

void check_finite(Complex s, const char* who) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    fail(ErrorCode::InvalidArgument, std::string(who) + ": non-finite argument");
  }
}

Complex stirling_series(Complex z, int terms) {
  Complex result = (z - 0.5) * std::log(z) - z + 0.5 * kLogTwoPi;
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex power = inv;
  for (int k = 1; k <= terms; ++k) {
    result += bernoulli_even(k) / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  return result;
}

}  // namespace

double bernoulli_even(int k) {
  require(k >= 0 && k < static_cast<int>(kBernoulliEven.size()),
          "bernoulli_even: index out of range");
  return kBernoulliEven[static_cast<std::size_t>(k)];
}

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::nan("");
  double r = std::remainder(x, 2.0);  // exact, r in [-1, 1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::nan("");
  const double a = std::fabs(std::remainder(x, 2.0));  // a in [0, 1]
  if (a == 0.5) return 0.0;
  if (a == 0.0) return 1.0;
  if (a == 1.0) return -1.0;
  if (a < 0.25) return std::cos(kPi * a);
  if (a <= 0.75) return std::sin(kPi * (0.5 - a));
  return -std::cos(kPi * (1.0 - a));
}

Complex sin_pi(Complex z) {
  const double u = z.real();
  const double v = z.imag();
  if (v == 0.0) return {sin_pi(u), 0.0};
  return {sin_pi(u) * std::cosh(kPi * v), cos_pi(u) * std::sinh(kPi * v)};
}

Complex cos_pi(Complex z) {
  const double u = z.real();
  const double v = z.imag();
  if (v == 0.0) return {cos_pi(u), 0.0};
  return {cos_pi(u) * std::cosh(kPi * v), -sin_pi(u) * std::sinh(kPi * v)};
}

Complex log_sin_pi(Complex z) {
  const double v = z.imag();
  if (std::fabs(v) < 20.0) return std::log(sin_pi(z));
  const Complex i_pi_z = Complex(0.0, kPi) * z;
  if (v > 0.0) {
    // sin(pi z) = e^{-i pi z} (i/2) (1 - e^{2 i pi z})
    const Complex w = -std::exp(2.0 * i_pi_z);
    return -i_pi_z + Complex(-std::log(2.0), 0.5 * kPi) + std::log(1.0 + w);
  }
  // sin(pi z) = e^{i pi z} (-i/2) (1 - e^{-2 i pi z})
  const Complex w = -std::exp(-2.0 * i_pi_z);
  return i_pi_z + Complex(-std::log(2.0), -0.5 * kPi) + std::log(1.0 + w);
}

Complex exprel(Complex z) {
  if (std::abs(z) >= 0.5) return (std::exp(z) - 1.0) / z;
  Complex term = 1.0;
  Complex sum = 1.0;
  for (int k = 2; k < 40; ++k) {
    term *= z / static_cast<double>(k);
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return sum;
}

Complex log_gamma(Complex s) {
  check_finite(s, "log_gamma");
  if (s.real() <= 0.5) {
    const double n = std::round(s.real());
    if (n <= 0.0 && std::abs(s - Complex(n, 0.0)) <= kPoleTolerance) {
      fail(ErrorCode::Pole, "log_gamma: pole at s = " + std::to_string(n));
    }
  }
  if (s.real() < 0.5) {
    // Gamma(s) Gamma(1 - s) = pi / sin(pi s)
    return std::log(kPi) - log_sin_pi(s) - log_gamma(1.0 - s);
  }
  Complex z = s;
  ComplexNeumaierSum shift;
  while (std::abs(z) < kStirlingThreshold) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling_series(z, kStirlingTerms) - shift.value();
}

double log_gamma(double s) { return log_gamma(Complex(s, 0.0)).real(); }

Complex gamma(Complex s) { return std::exp(log_gamma(s)); }

double stirling_log_gamma(double s, int terms) {
  require(std::isfinite(s) && s >= 2.0, "stirling_log_gamma: requires s >= 2");
  require(terms >= 1 && terms <= 10,
          "stirling_log_gamma: requires 1 <= terms <= 10");
  NeumaierSum sum;
  sum += (s - 0.5) * std::log(s);
  sum += -s;
  sum += 0.5 * kLogTwoPi;
  double power = 1.0 / s;
  for (int k = 1; k <= terms; ++k) {
    sum += bernoulli_even(k) / (2.0 * k * (2.0 * k - 1.0)) * power;
    power /= s * s;
  }
  return sum.value();
}

double stirling_error_bound(double s, int terms) {
  const int k = terms + 1;
  return std::fabs(bernoulli_even(k)) / (2.0 * k * (2.0 * k - 1.0)) *
         std::pow(s, 1.0 - 2.0 * k);
}

double gamma_tail_majorant_constant(double x) {
  // |log Gamma(z) - Stirling leading part| <= 1/(6|z|) for Re z > 0, and for
  // t >= 2x: t arg z >= pi t/2 - x, |z| <= (sqrt5/2) t.
  return std::sqrt(kTwoPi) * std::pow(std::sqrt(5.0) / 2.0, x - 0.5) *
         std::exp(1.0 / (12.0 * x));
}

GammaBoundReport gamma_ratio_bound_check(double sigma, double t_cut,
                                         double quad_tol) {
  require(std::isfinite(sigma) && sigma >= 2.0,
          "gamma_ratio_bound_check: requires sigma >= 2");
  const double x = sigma + 2.0;
  require(std::isfinite(t_cut) && t_cut >= 2.0 * x,
          "gamma_ratio_bound_check: requires t_cut >= 2(sigma + 2)");
  require(std::isfinite(quad_tol) && quad_tol > 0.0,
          "gamma_ratio_bound_check: requires quad_tol > 0");

  const double power = x - 0.5;  // = sigma + 3/2
  const double k_const = gamma_tail_majorant_constant(x);
  // Both half-lines: 2 K T^p e^{-T} / (1 - p/T), valid for T > p.
  auto tail = [&](double T) {
    return 2.0 * k_const * std::exp(power * std::log(T) - T) / (1.0 - power / T);
  };
  const double scale = std::max(1.0, std::exp(log_gamma(x)));
  double T = t_cut;
  while (tail(T) > 0.5 * quad_tol * scale) T *= 1.2;

  auto integrand = [x](double t) {
    return std::exp(log_gamma(Complex(x, t)).real());
  };
  QuadratureOptions opts;
  opts.abs_tol = 0.25 * quad_tol;
  opts.rel_tol = 0.25 * quad_tol;
  opts.max_intervals = 20000;
  const auto half = integrate<double>(integrand, 0.0, T, opts);
  if (!half.converged) {
    fail(ErrorCode::NotConverged,
         "gamma_ratio_bound_check: quadrature did not reach tolerance "
         "(estimated error " + std::to_string(2.0 * half.error) + ")");
  }

  GammaBoundReport report;
  report.sigma = sigma;
  report.t_cut = T;
  report.integral_value = 2.0 * half.value;
  report.quadrature_error = 2.0 * half.error;
  report.tail_bound = tail(T);
  report.bound_ratio =
      report.integral_value /
      std::exp(3.0 * std::log(sigma) + log_gamma(sigma));
  return report;
}

}  // namespace gds
