// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#include "growth.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <limits>

#include "error.hpp"
#include "summation.hpp"

namespace gds {

namespace {

constexpr double kInvGolden = 0.6180339887498949;

struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double rms = 0.0;
};

double rms_about(std::span<const double> x, std::span<const double> y, double slope) {
  NeumaierSum mean;
  for (std::size_t i = 0; i < x.size(); ++i) mean += y[i] - slope * x[i];
  const double c = mean.value() / static_cast<double>(x.size());
  NeumaierSum ss;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - slope * x[i] - c;
    ss += e * e;
  }
  return std::sqrt(ss.value() / static_cast<double>(x.size()));
}

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  NeumaierSum sx, sy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx.value() / n;
  const double my = sy.value() / n;
  NeumaierSum sxx, sxy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxy.value() / sxx.value();
  fit.intercept = my - fit.slope * mx;
  fit.rms = rms_about(x, y, fit.slope);
  return fit;
}

double wrap_angle(double theta) {
  double t = std::remainder(theta, kTwoPi);
  if (t <= -kPi) t += kTwoPi;
  return t;
}

}  // namespace

GrowthProfile max_modulus_profile(const Series& series, std::span<const double> r_grid,
                                  int angular_resolution, double tol) {
  require(!r_grid.empty(), "max_modulus_profile: empty r grid");
  require(angular_resolution >= 360, "max_modulus_profile: angular_resolution must be >= 360");
  require(std::isfinite(tol) && tol > 0.0, "max_modulus_profile: tol must be > 0");
  if (!series.has_continuation()) {
    fail(ErrorCode::UnsupportedRegion, "max_modulus_profile: series has no continuation");
  }
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    require(std::isfinite(r_grid[i]) && r_grid[i] >= 1.5,
            "max_modulus_profile: every r must be >= 3/2");
    if (i > 0) require(r_grid[i] > r_grid[i - 1], "max_modulus_profile: r grid must increase");
  }

  GrowthProfile profile;
  profile.angular_resolution = angular_resolution;
  for (const double r : r_grid) {
    auto log_abs = [&](double theta) -> std::optional<double> {
      const Complex s = std::polar(r, theta);
      if (std::abs(s - 1.0) <= 1e-6) return std::nullopt;
      try {
        const double m = std::abs(evaluate(series, s, tol).value);
        return std::log(m);
      } catch (const Error&) {
        return std::nullopt;
      }
    };
    const double step = kTwoPi / angular_resolution;
    double best = -std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    for (int j = 0; j < angular_resolution; ++j) {
      const double theta = -kPi + step * (j + 1);
      const auto v = log_abs(theta);
      if (!v) {
        profile.skipped.push_back("r=" + std::to_string(r) + " theta=" + std::to_string(theta));
        continue;
      }
      if (*v > best) {
        best = *v;
        best_theta = theta;
      }
    }
    if (!std::isfinite(best)) {
      fail(ErrorCode::NotConverged, "max_modulus_profile: no evaluable point on |s| = " +
                                        std::to_string(r));
    }
    // golden-section search for the maximum on [best - step, best + step]
    double a = best_theta - step;
    double b = best_theta + step;
    double c = b - kInvGolden * (b - a);
    double d = a + kInvGolden * (b - a);
    auto value = [&](double t) {
      const auto v = log_abs(t);
      return v ? *v : -std::numeric_limits<double>::infinity();
    };
    double fc = value(c);
    double fd = value(d);
    while (b - a > 1e-6) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvGolden * (b - a);
        fc = value(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvGolden * (b - a);
        fd = value(d);
      }
    }
    const double mid = 0.5 * (a + b);
    const double fmid = value(mid);
    if (fmid > best) {
      best = fmid;
      best_theta = mid;
    }
    profile.samples.push_back({r, best, wrap_angle(best_theta)});
  }
  return profile;
}

GrowthInvariants fit_invariants(const GrowthProfile& profile, int d_max) {
  require(profile.samples.size() >= 4, "fit_invariants: need at least 4 samples");
  require(d_max >= 1, "fit_invariants: d_max must be >= 1");
  std::vector<double> r;
  std::vector<double> log_m;
  for (const auto& s : profile.samples) {
    require(std::isfinite(s.r) && std::isfinite(s.log_max),
            "fit_invariants: samples must be finite");
    r.push_back(s.r);
    log_m.push_back(s.log_max);
  }
  bool degenerate = true;
  for (double v : r) degenerate = degenerate && v == r.front();
  if (degenerate) fail(ErrorCode::InvalidArgument, "fit_invariants: degenerate grid (all r equal)");

  GrowthInvariants best;
  best.fit_residual = std::numeric_limits<double>::infinity();
  std::vector<double> best_y;
  for (int d = 1; d <= d_max; ++d) {
    std::vector<double> y(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) y[i] = log_m[i] - d * log_gamma(r[i]);
    const auto fit = least_squares(r, y);
    if (fit.rms < best.fit_residual) {
      best.d = d;
      best.alpha = std::exp(-fit.slope);
      best.fit_residual = fit.rms;
      best_y = y;
    }
  }
  best.q = std::exp(best.d * std::log(kTwoPi)) / best.alpha;
  best.r_grid = r;
  best.perturbed_residual = rms_about(r, best_y, -std::log(1.2 * best.alpha));
  best.residual_ratio = best.fit_residual > 0.0
                            ? best.perturbed_residual / best.fit_residual
                            : std::numeric_limits<double>::infinity();
  best.lower_bound_heuristic_pass = best.residual_ratio >= 10.0;
  return best;
}

GrowthInvariants invariants_from_fe(const FunctionalEquationData& fe) {
  require(!fe.factors.empty(), "invariants_from_fe: gamma_factors must be non-empty");
  require(std::isfinite(fe.Q) && fe.Q > 0.0, "invariants_from_fe: Q must be > 0");
  require(std::fabs(std::abs(fe.w) - 1.0) <= 1e-12, "invariants_from_fe: |w| must be 1");
  NeumaierSum raw;
  NeumaierSum log_prod;  // sum 2 alpha_i log alpha_i, with 0^0 = 1
  for (const auto& f : fe.factors) {
    require(std::isfinite(f.alpha) && f.alpha >= 0.0, "invariants_from_fe: alpha_i must be >= 0");
    require(f.beta.real() >= 0.0, "invariants_from_fe: Re(beta_i) must be >= 0");
    raw += 2.0 * f.alpha;
    if (f.alpha > 0.0) log_prod += 2.0 * f.alpha * std::log(f.alpha);
  }
  const double raw_degree = raw.value();
  const double rounded = std::round(raw_degree);
  if (std::fabs(raw_degree - rounded) > 1e-9 || rounded < 1.0) {
    throw NonIntegerDegreeError(raw_degree, "invariants_from_fe: degree 2*sum(alpha) = " +
                                                std::to_string(raw_degree) +
                                                " is not a positive integer");
  }
  GrowthInvariants inv;
  inv.d = static_cast<int>(rounded);
  const double log_two_pi_d = inv.d * std::log(kTwoPi);
  const double log_q = log_two_pi_d + 2.0 * std::log(fe.Q) + log_prod.value();
  inv.q = std::exp(log_q);
  inv.alpha = std::exp(log_two_pi_d - log_q);
  inv.fit_residual = 0.0;
  inv.lower_bound_heuristic_pass = true;
  return inv;
}

FunctionalEquationData duplicate_factor(const FunctionalEquationData& fe, std::size_t index) {
  require(index < fe.factors.size(), "duplicate_factor: index out of range");
  FunctionalEquationData out = fe;
  const auto f = fe.factors[index];
  // Gamma(z) = 2^{z-1} pi^{-1/2} Gamma(z/2) Gamma((z+1)/2), z = alpha s + beta
  out.Q = fe.Q * std::pow(2.0, f.alpha);
  out.factors[index] = {0.5 * f.alpha, 0.5 * f.beta};
  out.factors.insert(out.factors.begin() + static_cast<std::ptrdiff_t>(index) + 1,
                     GammaFactor{0.5 * f.alpha, 0.5 * (f.beta + 1.0)});
  return out;
}

std::optional<FunctionalEquationData> builtin_functional_equation(const Series& series) {
  FunctionalEquationData fe;
  switch (series.family()) {
    case Family::RiemannZeta:
      fe.Q = 1.0 / std::sqrt(kPi);
      fe.factors = {{0.5, 0.0}};
      return fe;
    case Family::DirichletL: {
      const auto& chi = series.character();
      const double q = chi.modulus;
      const bool odd = chi(-1) < 0.0;
      fe.Q = std::sqrt(q / kPi);
      fe.factors = {{0.5, odd ? 0.5 : 0.0}};
      return fe;
    }
    case Family::DedekindQuadratic: {
      const double D = static_cast<double>(series.discriminant());
      if (D < 0) {
        fe.Q = std::sqrt(-D) / kTwoPi;
        fe.factors = {{1.0, 0.0}};
      } else {
        fe.Q = std::sqrt(D) / kPi;
        fe.factors = {{0.5, 0.0}, {0.5, 0.0}};
      }
      return fe;
    }
    default:
      return std::nullopt;
  }
}

std::optional<NominalInvariants> nominal_invariants(const Series& series) {
  if (series.family() == Family::ShiftedZeta) return NominalInvariants{1, kTwoPi, 1.0};
  const auto fe = builtin_functional_equation(series);
  if (!fe) return std::nullopt;
  const auto inv = invariants_from_fe(*fe);
  return NominalInvariants{inv.d, inv.alpha, inv.q};
}

FunctionalEquationData parse_fe_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Schema, "malformed JSON at byte " + std::to_string(e.byte));
  }
  auto bad = [](const std::string& at, const std::string& what) {
    fail(ErrorCode::Schema, "field " + at + ": " + what);
  };
  auto complex_of = [&](const json& v, const std::string& at) -> Complex {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      return {v[0].get<double>(), v[1].get<double>()};
    }
    bad(at, "expected a number or [re, im]");
    return {};
  };
  if (!doc.is_object()) bad("/", "expected an object");
  FunctionalEquationData fe;
  if (!doc.contains("Q") || !doc["Q"].is_number()) bad("/Q", "expected a number");
  fe.Q = doc["Q"].get<double>();
  if (!doc.contains("gamma_factors") || !doc["gamma_factors"].is_array()) {
    bad("/gamma_factors", "expected an array");
  }
  const auto& factors = doc["gamma_factors"];
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto at = "/gamma_factors/" + std::to_string(i);
    const auto& f = factors[i];
    if (!f.is_object() || !f.contains("alpha") || !f["alpha"].is_number()) {
      bad(at + "/alpha", "expected a number");
    }
    GammaFactor g;
    g.alpha = f["alpha"].get<double>();
    g.beta = f.contains("beta") ? complex_of(f["beta"], at + "/beta") : Complex(0.0);
    fe.factors.push_back(g);
  }
  if (doc.contains("w")) fe.w = complex_of(doc["w"], "/w");
  return fe;
}

std::string profile_to_csv(const GrowthProfile& profile) {
  std::string out = "r,logM,argmax_angle\n";
  char line[128];
  for (const auto& s : profile.samples) {
    std::snprintf(line, sizeof line, "%.15g,%.15g,%.15g\n", s.r, s.log_max, s.argmax_angle);
    out += line;
  }
  return out;
}

}  // namespace gds
