// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#include "hurwitz.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "error.hpp"
#include "summation.hpp"

namespace gds {

namespace {

constexpr int kBernoulliTerms = 8;
constexpr long long kMaxCut = 10'000'000;

// B_{2j} / (2j)!
double bernoulli_factorial(int j) {
  double f = 1.0;
  for (int i = 2; i <= 2 * j; ++i) f *= i;
  return bernoulli_even(j) / f;
}

// Backlund's bound for the Euler-Maclaurin remainder after K corrections:
// |R| <= |T_{K+1}| |s + 2K + 1| / (sigma + 2K + 1).
double remainder_bound(Complex s, double x) {
  const int K = kBernoulliTerms;
  double rising = 1.0;
  for (int i = 0; i <= 2 * K; ++i) rising *= std::abs(s + static_cast<double>(i));
  const double sigma = s.real();
  const double term = std::fabs(bernoulli_factorial(K + 1)) * rising *
                      std::exp((-sigma - 2.0 * K - 1.0) * std::log(x));
  return term * std::abs(s + (2.0 * K + 1.0)) / (sigma + 2.0 * K + 1.0);
}

}  // namespace

CertifiedValue hurwitz_combination(Complex s, std::span<const Complex> coeffs,
                                   std::span<const double> shifts, double tol) {
  require(coeffs.size() == shifts.size(), "hurwitz_combination: size mismatch");
  require(tol > 0.0 && std::isfinite(tol), "hurwitz_combination: tol must be > 0");
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    fail(ErrorCode::InvalidArgument, "hurwitz_combination: non-finite s");
  }
  if (s.real() <= -(2.0 * kBernoulliTerms + 1.0)) {
    fail(ErrorCode::UnsupportedRegion,
         "hurwitz_combination: Re(s) must exceed -17");
  }
  double coeff_abs = 0.0;
  Complex coeff_sum = 0.0;
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    require(shifts[j] > 0.0, "hurwitz_combination: shifts must be positive");
    coeff_abs += std::abs(coeffs[j]);
    coeff_sum += coeffs[j];
  }
  if (coeff_abs == 0.0) return {};
  const bool has_pole = std::abs(coeff_sum) > 1e-14 * coeff_abs;
  if (has_pole && std::abs(s - 1.0) <= 1e-12) {
    fail(ErrorCode::Pole, "hurwitz_combination: s is at the pole s = 1");
  }

  long long N = std::max<long long>(4, static_cast<long long>(std::abs(s) / 4.0));
  double bound = 0.0;
  while (true) {
    bound = 0.0;
    for (std::size_t j = 0; j < shifts.size(); ++j) {
      bound += std::abs(coeffs[j]) * remainder_bound(s, N + shifts[j]);
    }
    if (bound <= 0.5 * tol) break;
    if (N >= kMaxCut) {
      fail(ErrorCode::NotConverged,
           "hurwitz_combination: Euler-Maclaurin cut exceeded 1e7 (remainder " +
               std::to_string(bound) + ")");
    }
    N = std::min(kMaxCut, std::max(N + 1, static_cast<long long>(1.5 * N)));
  }

  ComplexNeumaierSum total;
  const Complex one_minus_s = 1.0 - s;
  const double log_x0 = std::log(N + shifts[0]);
  const Complex pow_x0 = std::exp(one_minus_s * log_x0);  // x_0^{1-s}
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    const Complex c = coeffs[j];
    if (c == 0.0) continue;
    const double a = shifts[j];
    ComplexNeumaierSum direct;
    for (long long k = 0; k < N; ++k) {
      direct += std::exp(-s * std::log(static_cast<double>(k) + a));
    }
    total += c * direct.value();

    const double x = static_cast<double>(N) + a;
    const double log_x = std::log(x);
    const Complex x_pow = std::exp(-s * log_x);  // x^{-s}
    total += c * 0.5 * x_pow;
    // x^{1-s} / (s-1) relative to the reference cut x_0
    const double delta = log_x - log_x0;
    total += -c * pow_x0 * delta * exprel(one_minus_s * delta);

    Complex rising = s;  // (s)_{2j-1}
    Complex power = x_pow / x;
    const double inv_x2 = 1.0 / (x * x);
    for (int i = 1; i <= kBernoulliTerms; ++i) {
      total += c * bernoulli_factorial(i) * rising * power;
      rising *= (s + (2.0 * i - 1.0)) * (s + 2.0 * i);
      power *= inv_x2;
    }
  }
  if (has_pole) total += coeff_sum * pow_x0 / (s - 1.0);
  return {total.value(), bound};
}

CertifiedValue hurwitz_zeta(Complex s, double a, double tol) {
  const Complex c[1] = {1.0};
  const double sh[1] = {a};
  return hurwitz_combination(s, c, sh, tol);
}

bool Character::is_principal_like() const {
  return std::accumulate(values.begin(), values.end(), 0.0) != 0.0;
}

CertifiedValue dirichlet_l(Complex s, const Character& chi, double tol) {
  const int q = chi.modulus;
  require(q >= 1 && static_cast<int>(chi.values.size()) == q,
          "dirichlet_l: character table must have modulus entries");
  const double log_q = std::log(static_cast<double>(q));

  if (s.real() >= -0.5) {
    std::vector<Complex> coeffs;
    std::vector<double> shifts;
    for (int a = 1; a <= q; ++a) {
      const double v = chi(a);
      if (v == 0.0) continue;
      coeffs.emplace_back(v);
      shifts.push_back(static_cast<double>(a) / q);
    }
    if (coeffs.empty()) return {};
    const Complex scale = std::exp(-s * log_q);
    const auto inner =
        hurwitz_combination(s, coeffs, shifts, tol / std::abs(scale));
    return {scale * inner.value, std::abs(scale) * inner.error};
  }

  // L(s) = 2 Gamma(1-s) (2 pi q)^{s-1} q^{-s}
  //        * sum_r [cos A C_r + sin A S_r] zeta(1-s, r/q),  A = pi (1-s)/2,
  // with C_r, S_r the cosine / sine sums of chi against e(rm/q).
  const Complex half = 0.5 * (1.0 - s);
  const Complex cos_a = cos_pi(half);
  const Complex sin_a = sin_pi(half);
  std::vector<Complex> coeffs;
  std::vector<double> shifts;
  for (int r = 1; r <= q; ++r) {
    double c_r = 0.0;
    double s_r = 0.0;
    for (int m = 1; m <= q; ++m) {
      const double v = chi(m);
      if (v == 0.0) continue;
      const long long k = (static_cast<long long>(r) * m) % q;
      c_r += v * cos_pi(2.0 * static_cast<double>(k) / q);
      s_r += v * sin_pi(2.0 * static_cast<double>(k) / q);
    }
    const Complex w = cos_a * c_r + sin_a * s_r;
    if (w == 0.0) continue;
    coeffs.push_back(w);
    shifts.push_back(static_cast<double>(r) / q);
  }
  if (coeffs.empty()) return {};
  const Complex log_prefactor = std::log(2.0) + log_gamma(1.0 - s) +
                                (s - 1.0) * (std::log(kTwoPi) + log_q) -
                                s * log_q;
  const Complex prefactor = std::exp(log_prefactor);
  const double mag = std::abs(prefactor);
  if (!std::isfinite(mag)) {
    fail(ErrorCode::UnsupportedRegion, "dirichlet_l: prefactor overflow");
  }
  const auto inner = hurwitz_combination(1.0 - s, coeffs, shifts,
                                         tol / std::max(mag, 1e-300));
  return {prefactor * inner.value, mag * inner.error};
}

CertifiedValue dirichlet_tail(Complex s, const Character& chi, long long N,
                              double tol) {
  require(s.real() > 1.0, "dirichlet_tail: requires Re(s) > 1");
  require(N >= 0, "dirichlet_tail: requires N >= 0");
  const int q = chi.modulus;
  std::vector<Complex> coeffs;
  std::vector<double> shifts;
  for (int a = 1; a <= q; ++a) {
    const double v = chi(N + a);
    if (v == 0.0) continue;
    coeffs.emplace_back(v);
    shifts.push_back(static_cast<double>(N + a) / q);
  }
  if (coeffs.empty()) return {};
  const Complex scale = std::exp(-s * std::log(static_cast<double>(q)));
  const auto inner = hurwitz_combination(s, coeffs, shifts, tol / std::abs(scale));
  return {scale * inner.value, std::abs(scale) * inner.error};
}

}  // namespace gds
