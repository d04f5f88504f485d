// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hurwitz.hpp"

namespace gds {

enum class Family { RiemannZeta, ShiftedZeta, DirichletL, DedekindQuadratic, Explicit };

const char* family_name(Family f);

struct Term {
  double lambda = 0.0;
  double a = 0.0;
};

/// Bound on sum |a_n| lambda_n^{-sigma} over the terms an explicit series
/// does not list. Two shapes:
///   integral_test: C lambda_last^{1 + kappa - sigma} / (sigma - 1 - kappa),
///                  sigma > 1 + kappa (|a_n| <= C n^kappa with lambda_n ~ n);
///   geometric:     C ratio^sigma, sigma >= sigma_min, 0 < ratio < 1.
struct TailBound {
  enum class Type { IntegralTest, Geometric };
  Type type = Type::IntegralTest;
  double C = 0.0;
  double kappa = 0.0;
  double ratio = 0.0;
  double sigma_min = 0.0;

  bool valid_at(double sigma) const;
  double bound(double sigma, double lambda_last) const;
};

/// A general Dirichlet series sum a_n lambda_n^{-s}. The four built-in
/// families carry analytic continuation; explicit series are finite term lists
/// plus an optional bound on what was left out.
class Series {
 public:
  static Series riemann_zeta();
  static Series shifted_zeta();  // (2^s - 1) zeta(s), lambda_n = n - 1/2
  static Series dirichlet_l(const Character& chi, std::string name = "");
  static Series dedekind_quadratic(long long discriminant);
  static Series from_terms(std::string name, std::vector<Term> terms,
                           std::optional<TailBound> tail);

  Family family() const { return family_; }
  const std::string& name() const { return name_; }
  long long discriminant() const { return discriminant_; }
  const Character& character() const { return chi_; }
  const std::vector<Term>& listed_terms() const { return terms_; }
  const std::optional<TailBound>& tail_descriptor() const { return tail_; }

  bool has_continuation() const { return family_ != Family::Explicit; }
  bool has_pole() const;

  /// Terms with index n <= N (lambda_n = n, or n - 1/2 for shifted_zeta);
  /// zero coefficients are skipped. Explicit series: the first N listed terms.
  std::vector<Term> terms_through(long long N) const;
  std::vector<Term> terms_below(double lambda_cutoff) const;

  /// sum over terms_through(N) of a lambda^{-s}.
  Complex partial_sum(Complex s, long long N) const;
  /// Upper bound on sum_{n > N} |a_n| lambda_n^{-sigma}; needs sigma > 1.
  double tail_abs_bound(double sigma, long long N) const;
  /// sum_{n > N} a_n lambda_n^{-sigma} for built-in families, sigma > 1.
  CertifiedValue tail_power_sum(double sigma, long long N, double tol) const;

 private:
  Family family_ = Family::RiemannZeta;
  std::string name_;
  long long discriminant_ = 0;
  Character chi_;
  std::vector<Term> terms_;
  std::optional<TailBound> tail_;
};

/// F(s) with error <= tol. Built-in families: any s with |s - 1| > 1e-12
/// (when F has a pole). Explicit: Re(s) > 1 inside the tail bound's range.
CertifiedValue evaluate(const Series& series, Complex s, double tol);

/// F^(order)(s) by the trapezoid rule on the circle |z - s| = 1/2, doubling
/// the node count until successive estimates agree to tol/2.
CertifiedValue derivative(const Series& series, Complex s, int order, double tol);

/// Residue at s = 1 from the contour |z - 1| = 1/4.
double residue_at_pole(const Series& series, double tol);

struct AxiomCheck {
  std::string id;
  bool pass = false;
  std::string witness;  // empty when passing
};

struct ClassBReport {
  std::vector<AxiomCheck> axioms;
  double rho = 0.0;
  std::vector<double> trivial_zero_residuals;  // |F(-2nd)|, n = 1..n_zeros
  bool all_pass() const;
};

/// Checks axioms (1), (2) and (4); growth (3) is the business of the growth
/// profile. Coefficient checks inspect the first 2000 terms of built-ins.
ClassBReport check_class_B(const Series& series, int d, int n_zeros, double tol);

/// Terms of a + sign*b with lambda <= cutoff, coefficients added on exactly
/// equal lambda and zeros dropped. The result has no tail bound.
Series to_lambda_merge(const Series& a, const Series& b, double sign,
                       double cutoff);

}  // namespace gds
