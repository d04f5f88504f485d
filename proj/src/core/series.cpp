// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#include "series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "contour.hpp"
#include "error.hpp"
#include "kronecker.hpp"
#include "summation.hpp"

namespace gds {

namespace {

constexpr double kPoleExclusion = 1e-12;
constexpr int kCoefficientCheckTerms = 2000;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

// a_n = sum_{m | n} chi(m) for n = 0..N (index 0 unused).
std::vector<double> divisor_character_sums(const Character& chi, long long N) {
  std::vector<double> a(static_cast<std::size_t>(N + 1), 0.0);
  for (long long m = 1; m <= N; ++m) {
    const double v = chi(m);
    if (v == 0.0) continue;
    for (long long n = m; n <= N; n += m) a[static_cast<std::size_t>(n)] += v;
  }
  return a;
}

double zeta_upper(double sigma) { return 1.0 + 1.0 / (sigma - 1.0); }

Complex two_pow_minus_one(Complex s) {
  const Complex z = s * std::log(2.0);
  return z * exprel(z);
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::RiemannZeta: return "riemann_zeta";
    case Family::ShiftedZeta: return "shifted_zeta";
    case Family::DirichletL: return "dirichlet_L";
    case Family::DedekindQuadratic: return "dedekind_quadratic";
    case Family::Explicit: return "explicit";
  }
  return "unknown";
}

bool TailBound::valid_at(double sigma) const {
  if (type == Type::IntegralTest) return sigma > 1.0 + kappa;
  return sigma >= sigma_min;
}

double TailBound::bound(double sigma, double lambda_last) const {
  if (!valid_at(sigma)) return std::numeric_limits<double>::infinity();
  if (type == Type::IntegralTest) {
    return C * std::pow(lambda_last, 1.0 + kappa - sigma) / (sigma - 1.0 - kappa);
  }
  return C * std::pow(ratio, sigma);
}

Series Series::riemann_zeta() {
  Series s;
  s.family_ = Family::RiemannZeta;
  s.name_ = "zeta";
  return s;
}

Series Series::shifted_zeta() {
  Series s;
  s.family_ = Family::ShiftedZeta;
  s.name_ = "shifted_zeta";
  return s;
}

Series Series::dirichlet_l(const Character& chi, std::string name) {
  require(chi.modulus >= 1 && static_cast<int>(chi.values.size()) == chi.modulus,
          "dirichlet_l: character table must have modulus entries");
  for (double v : chi.values) {
    require(std::isfinite(v) && std::fabs(v) <= 1.0,
            "dirichlet_l: character values must lie in [-1, 1]");
  }
  Series s;
  s.family_ = Family::DirichletL;
  s.chi_ = chi;
  s.name_ = name.empty() ? "L(s,chi mod " + std::to_string(chi.modulus) + ")" : name;
  return s;
}

Series Series::dedekind_quadratic(long long discriminant) {
  Series s;
  s.family_ = Family::DedekindQuadratic;
  s.chi_ = kronecker_character(discriminant);
  s.discriminant_ = discriminant;
  s.name_ = "dedekind(" + std::to_string(discriminant) + ")";
  return s;
}

Series Series::from_terms(std::string name, std::vector<Term> terms,
                          std::optional<TailBound> tail) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    require(std::isfinite(terms[i].lambda) && terms[i].lambda > 0.0,
            "from_terms: lambda must be finite and > 0 (term " + std::to_string(i) + ")");
    require(std::isfinite(terms[i].a),
            "from_terms: coefficient must be finite (term " + std::to_string(i) + ")");
  }
  if (tail) {
    require(std::isfinite(tail->C) && tail->C >= 0.0, "from_terms: tail C must be >= 0");
    if (tail->type == TailBound::Type::Geometric) {
      require(tail->ratio > 0.0 && tail->ratio < 1.0,
              "from_terms: geometric ratio must lie in (0, 1)");
    }
  }
  Series s;
  s.family_ = Family::Explicit;
  s.name_ = std::move(name);
  s.terms_ = std::move(terms);
  s.tail_ = tail;
  return s;
}

bool Series::has_pole() const {
  switch (family_) {
    case Family::RiemannZeta:
    case Family::ShiftedZeta:
    case Family::DedekindQuadratic: return true;
    case Family::DirichletL: return chi_.is_principal_like();
    case Family::Explicit: return false;
  }
  return false;
}

std::vector<Term> Series::terms_through(long long N) const {
  std::vector<Term> out;
  if (N <= 0) return out;
  switch (family_) {
    case Family::RiemannZeta:
      for (long long n = 1; n <= N; ++n) out.push_back({static_cast<double>(n), 1.0});
      break;
    case Family::ShiftedZeta:
      for (long long n = 1; n <= N; ++n) out.push_back({n - 0.5, 1.0});
      break;
    case Family::DirichletL:
      for (long long n = 1; n <= N; ++n) {
        const double v = chi_(n);
        if (v != 0.0) out.push_back({static_cast<double>(n), v});
      }
      break;
    case Family::DedekindQuadratic: {
      const auto a = divisor_character_sums(chi_, N);
      for (long long n = 1; n <= N; ++n) {
        const double v = a[static_cast<std::size_t>(n)];
        if (v != 0.0) out.push_back({static_cast<double>(n), v});
      }
      break;
    }
    case Family::Explicit: {
      const auto count = std::min<std::size_t>(terms_.size(), static_cast<std::size_t>(N));
      out.assign(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(count));
      break;
    }
  }
  return out;
}

std::vector<Term> Series::terms_below(double lambda_cutoff) const {
  if (family_ == Family::Explicit) {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (t.lambda <= lambda_cutoff) out.push_back(t);
    }
    return out;
  }
  const double index = family_ == Family::ShiftedZeta ? lambda_cutoff + 0.5 : lambda_cutoff;
  return terms_through(static_cast<long long>(std::floor(index)));
}

Complex Series::partial_sum(Complex s, long long N) const {
  ComplexNeumaierSum sum;
  for (const auto& t : terms_through(N)) {
    sum += t.a * std::exp(-s * std::log(t.lambda));
  }
  return sum.value();
}

double Series::tail_abs_bound(double sigma, long long N) const {
  require(sigma > 1.0, "tail_abs_bound: requires sigma > 1");
  require(N >= 1, "tail_abs_bound: requires N >= 1");
  const double n = static_cast<double>(N);
  switch (family_) {
    case Family::RiemannZeta:
    case Family::DirichletL:
      return std::pow(n, 1.0 - sigma) / (sigma - 1.0);
    case Family::ShiftedZeta:
      return std::pow(n - 0.5, 1.0 - sigma) / (sigma - 1.0);
    case Family::DedekindQuadratic: {
      // |a_n| <= tau(n); pairs (m, l) with ml > N have max(m, l) > sqrt(N).
      const double M = std::floor(std::sqrt(n));
      return 2.0 * zeta_upper(sigma) * std::pow(M, 1.0 - sigma) / (sigma - 1.0);
    }
    case Family::Explicit: {
      if (!tail_) return std::numeric_limits<double>::infinity();
      NeumaierSum sum;
      for (std::size_t i = static_cast<std::size_t>(N); i < terms_.size(); ++i) {
        sum += std::fabs(terms_[i].a) * std::pow(terms_[i].lambda, -sigma);
      }
      const double last = terms_.empty() ? 1.0 : terms_.back().lambda;
      return sum.value() + tail_->bound(sigma, last);
    }
  }
  return std::numeric_limits<double>::infinity();
}

CertifiedValue Series::tail_power_sum(double sigma, long long N, double tol) const {
  require(sigma > 1.0, "tail_power_sum: requires sigma > 1");
  require(N >= 1, "tail_power_sum: requires N >= 1");
  const Complex s(sigma, 0.0);
  switch (family_) {
    case Family::RiemannZeta: return hurwitz_zeta(s, N + 1.0, tol);
    case Family::ShiftedZeta: return hurwitz_zeta(s, N + 0.5, tol);
    case Family::DirichletL: return dirichlet_tail(s, chi_, N, tol);
    case Family::DedekindQuadratic: {
      // sum_{ml > N} chi(m) m^{-s} l^{-s}
      //   = sum_{m <= N} chi(m) m^{-s} zeta(s, floor(N/m) + 1) + zeta(s) L_tail(N)
      const double each = 0.25 * tol / static_cast<double>(N);
      NeumaierSum sum;
      double err = 0.0;
      for (long long m = 1; m <= N; ++m) {
        const double v = chi_(m);
        if (v == 0.0) continue;
        const auto h = hurwitz_zeta(s, static_cast<double>(N / m + 1), each);
        const double w = v * std::pow(static_cast<double>(m), -sigma);
        sum += w * h.value.real();
        err += std::fabs(w) * h.error;
      }
      const auto z = hurwitz_zeta(s, 1.0, 0.25 * tol);
      const auto lt = dirichlet_tail(s, chi_, N, 0.25 * tol / zeta_upper(sigma));
      sum += z.value.real() * lt.value.real();
      err += std::fabs(z.value.real()) * lt.error + std::fabs(lt.value.real()) * z.error;
      return {sum.value(), err};
    }
    case Family::Explicit:
      fail(ErrorCode::InvalidArgument,
           "tail_power_sum: explicit series have no exact tail");
  }
  return {};
}

CertifiedValue evaluate(const Series& series, Complex s, double tol) {
  require(std::isfinite(tol) && tol > 0.0, "evaluate: tol must be > 0");
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    fail(ErrorCode::InvalidArgument, "evaluate: non-finite s");
  }
  if (series.has_pole() && std::abs(s - 1.0) <= kPoleExclusion) {
    fail(ErrorCode::Pole, "evaluate: s is within 1e-12 of the pole at s = 1");
  }
  static const Character kTrivial{};
  switch (series.family()) {
    case Family::RiemannZeta: return dirichlet_l(s, kTrivial, tol);
    case Family::ShiftedZeta: {
      const Complex factor = two_pow_minus_one(s);
      const double mag = std::abs(factor);
      if (mag == 0.0) return {0.0, 0.0};
      const auto z = dirichlet_l(s, kTrivial, tol / mag);
      return {factor * z.value, mag * z.error};
    }
    case Family::DirichletL: return dirichlet_l(s, series.character(), tol);
    case Family::DedekindQuadratic: {
      auto z = dirichlet_l(s, kTrivial, 0.25 * tol);
      const auto l = dirichlet_l(s, series.character(),
                                 0.25 * tol / std::max(1.0, std::abs(z.value) + z.error));
      const double l_mag = std::abs(l.value) + l.error;
      if (l_mag * z.error > 0.3 * tol) {
        z = dirichlet_l(s, kTrivial, 0.25 * tol / l_mag);
      }
      return {z.value * l.value,
              std::abs(z.value) * l.error + std::abs(l.value) * z.error + z.error * l.error};
    }
    case Family::Explicit: {
      const auto& tail = series.tail_descriptor();
      if (!tail) {
        fail(ErrorCode::InvalidArgument,
             "evaluate: explicit series '" + series.name() + "' has no tail bound");
      }
      if (s.real() <= 1.0 || !tail->valid_at(s.real())) {
        fail(ErrorCode::UnsupportedRegion,
             "evaluate: explicit series has no continuation at Re(s) = " + fmt(s.real()));
      }
      const auto& terms = series.listed_terms();
      ComplexNeumaierSum sum;
      for (const auto& t : terms) sum += t.a * std::exp(-s * std::log(t.lambda));
      const double bound =
          tail->bound(s.real(), terms.empty() ? 1.0 : terms.back().lambda);
      if (bound > tol) {
        fail(ErrorCode::NotConverged, "evaluate: tail bound " + fmt(bound) +
                                          " exceeds tolerance " + fmt(tol));
      }
      return {sum.value(), bound};
    }
  }
  return {};
}

CertifiedValue derivative(const Series& series, Complex s, int order, double tol) {
  require(order >= 0 && order <= 4, "derivative: order must be in [0, 4]");
  require(std::isfinite(tol) && tol > 0.0, "derivative: tol must be > 0");
  constexpr double r = 0.5;
  if (series.has_pole() && std::abs(s - 1.0) <= r + 1e-9) {
    fail(ErrorCode::Pole, "derivative: contour |z - s| = 1/2 meets or encloses s = 1");
  }
  if (!series.has_continuation() && s.real() - r <= 1.0) {
    fail(ErrorCode::UnsupportedRegion,
         "derivative: explicit series needs Re(s) > 3/2");
  }
  double scale = 1.0;
  for (int i = 2; i <= order; ++i) scale *= i;
  scale /= std::pow(r, order);
  double eval_err = 0.0;
  const auto m = circle_average(
      [&](Complex z, Complex e) {
        const auto v = evaluate(series, z, 0.25 * tol / scale);
        eval_err = std::max(eval_err, v.error);
        return v.value * std::pow(std::conj(e), order);
      },
      s, r, 0.5 * tol / scale);
  return {scale * m.value, scale * (m.change + eval_err)};
}

double residue_at_pole(const Series& series, double tol) {
  require(series.has_continuation(), "residue_at_pole: requires a built-in family");
  require(std::isfinite(tol) && tol > 0.0, "residue_at_pole: tol must be > 0");
  constexpr double r = 0.25;
  // (1/2 pi i) \oint F dz = r * mean of F(z) e^{i theta}
  const auto m = circle_average(
      [&](Complex z, Complex e) { return evaluate(series, z, 0.25 * tol / r).value * e; },
      1.0, r, 0.5 * tol / r);
  return r * m.value.real();
}

bool ClassBReport::all_pass() const {
  return std::all_of(axioms.begin(), axioms.end(),
                     [](const AxiomCheck& a) { return a.pass; });
}

ClassBReport check_class_B(const Series& series, int d, int n_zeros, double tol) {
  require(d >= 1, "check_class_B: d must be >= 1");
  require(n_zeros >= 0 && n_zeros <= 5, "check_class_B: n_zeros must be in [0, 5]");
  require(std::isfinite(tol) && tol > 0.0, "check_class_B: tol must be > 0");
  ClassBReport report;
  const auto terms = series.has_continuation()
                         ? series.terms_through(kCoefficientCheckTerms)
                         : series.listed_terms();

  AxiomCheck mono{"1.lambda_increasing", true, ""};
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!(terms[i].lambda > terms[i - 1].lambda)) {
      mono.pass = false;
      mono.witness = "lambda_" + std::to_string(i + 1) + "=" + fmt(terms[i].lambda) +
                     " <= lambda_" + std::to_string(i) + "=" + fmt(terms[i - 1].lambda);
      break;
    }
  }
  report.axioms.push_back(mono);

  AxiomCheck nonneg{"1.nonnegative_coefficients", true, ""};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].a < 0.0) {
      nonneg.pass = false;
      nonneg.witness = "a_" + std::to_string(i + 1) + "=" + fmt(terms[i].a) +
                       " at lambda=" + fmt(terms[i].lambda);
      break;
    }
  }
  report.axioms.push_back(nonneg);

  AxiomCheck norm{"1.normalized", true, ""};
  if (terms.empty()) {
    norm.pass = false;
    norm.witness = "no terms";
  } else if (terms.front().a != 1.0) {
    norm.pass = false;
    norm.witness = "a_1=" + fmt(terms.front().a);
  }
  report.axioms.push_back(norm);

  AxiomCheck pole{"2.simple_pole", true, ""};
  if (!series.has_continuation()) {
    pole.pass = false;
    pole.witness = "no analytic continuation for explicit series";
  } else {
    report.rho = residue_at_pole(series, tol);
    if (!(report.rho > tol)) {
      pole.pass = false;
      pole.witness = "residue=" + fmt(report.rho);
    }
  }
  report.axioms.push_back(pole);

  AxiomCheck zeros{"4.trivial_zeros", true, ""};
  if (!series.has_continuation()) {
    zeros.pass = n_zeros == 0;
    if (!zeros.pass) zeros.witness = "no analytic continuation for explicit series";
  } else {
    for (int n = 1; n <= n_zeros; ++n) {
      const double s = -2.0 * n * d;
      const auto v = evaluate(series, s, 0.1 * tol);
      const double residual = std::abs(v.value);
      report.trivial_zero_residuals.push_back(residual);
      if (residual > tol && zeros.pass) {
        zeros.pass = false;
        zeros.witness = "|F(" + fmt(s) + ")|=" + fmt(residual);
      }
    }
  }
  report.axioms.push_back(zeros);
  return report;
}

Series to_lambda_merge(const Series& a, const Series& b, double sign,
                       double cutoff) {
  require(std::isfinite(sign), "to_lambda_merge: sign must be finite");
  require(std::isfinite(cutoff) && cutoff > 0.0, "to_lambda_merge: cutoff must be > 0");
  std::map<double, double> merged;
  for (const auto& t : a.terms_below(cutoff)) merged[t.lambda] += t.a;
  for (const auto& t : b.terms_below(cutoff)) merged[t.lambda] += sign * t.a;
  std::vector<Term> terms;
  for (const auto& [lambda, coeff] : merged) {
    if (coeff != 0.0) terms.push_back({lambda, coeff});
  }
  return Series::from_terms("merge(" + a.name() + "," + b.name() + ")",
                            std::move(terms), std::nullopt);
}

}  // namespace gds
