// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "special_functions.hpp"

namespace gds {

struct CertifiedValue {
  Complex value;
  double error = 0.0;  // bound on the truncation remainder
};

/// sum_j c_j zeta(s, a_j) by Euler-Maclaurin with a common cut N and 8
/// Bernoulli corrections. The pole parts are combined before division by
/// s - 1, so a combination with sum c_j = 0 is regular at s = 1.
/// Needs Re(s) > -17 and every a_j > 0.
CertifiedValue hurwitz_combination(Complex s, std::span<const Complex> coeffs,
                                   std::span<const double> shifts, double tol);

CertifiedValue hurwitz_zeta(Complex s, double a, double tol);

/// Real-valued character mod q given as the table chi(0), ..., chi(q-1).
struct Character {
  int modulus = 1;
  std::vector<double> values{1.0};

  double operator()(long long n) const {
    const long long q = modulus;
    return values[static_cast<std::size_t>(((n % q) + q) % q)];
  }
  bool is_principal_like() const;  // sum of values != 0, i.e. L has a pole
};

/// L(s, chi) for any s != 1. Right of Re(s) = -1/2 the Hurwitz decomposition
/// q^{-s} sum_a chi(a) zeta(s, a/q) is summed directly; further left Hurwitz's
/// formula maps the evaluation to Re(1 - s) > 3/2.
CertifiedValue dirichlet_l(Complex s, const Character& chi, double tol);

/// sum_{n > N} chi(n) n^{-s} for Re(s) > 1.
CertifiedValue dirichlet_tail(Complex s, const Character& chi, long long N,
                              double tol);

}  // namespace gds
