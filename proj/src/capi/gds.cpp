// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#include "gds/gds.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "beurling.hpp"
#include "error.hpp"
#include "growth.hpp"
#include "kronecker.hpp"
#include "series.hpp"
#include "series_io.hpp"
#include "special_functions.hpp"
#include "uniqueness.hpp"

struct gds_series {
  gds::Series impl;
};

struct gds_profile {
  gds::GrowthProfile impl;
};

namespace {

thread_local std::string g_last_error;

gds_status to_status(gds::ErrorCode code) {
  switch (code) {
    case gds::ErrorCode::InvalidArgument: return GDS_ERR_INVALID_ARGUMENT;
    case gds::ErrorCode::Pole: return GDS_ERR_POLE;
    case gds::ErrorCode::UnsupportedRegion: return GDS_ERR_UNSUPPORTED_REGION;
    case gds::ErrorCode::Schema: return GDS_ERR_SCHEMA;
    case gds::ErrorCode::NotConverged: return GDS_ERR_NOT_CONVERGED;
    case gds::ErrorCode::NonIntegerDegree: return GDS_ERR_NON_INTEGER_DEGREE;
    case gds::ErrorCode::Internal: return GDS_ERR_INTERNAL;
  }
  return GDS_ERR_INTERNAL;
}

gds_status set_error(gds_status status, const std::string& what) {
  g_last_error = what;
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F>
gds_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return GDS_OK;
  } catch (const gds::Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(GDS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(GDS_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(GDS_ERR_INTERNAL, "unknown exception");
  }
}

#define GDS_CHECK_NULL(p) \
  if ((p) == nullptr) return set_error(GDS_ERR_NULL_ARGUMENT, #p " is null")

gds::Complex in(gds_complex z) { return {z.re, z.im}; }
gds_complex out_c(gds::Complex z) { return {z.real(), z.imag()}; }
gds_value out_v(const gds::CertifiedValue& v) { return {out_c(v.value), v.error}; }

void copy_string(char* dst, std::size_t cap, const std::string& src) {
  const std::size_t n = std::min(cap - 1, src.size());
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

gds_status emit_series(gds::Series s, gds_series** out) {
  *out = new gds_series{std::move(s)};
  return GDS_OK;
}

template <class Make>
gds_status make_series(gds_series** out, Make&& make) {
  GDS_CHECK_NULL(out);
  return guarded([&] { emit_series(make(), out); });
}

gds_invariants out_inv(const gds::GrowthInvariants& g) {
  return {g.d,
          g.alpha,
          g.q,
          g.fit_residual,
          g.perturbed_residual,
          g.residual_ratio,
          g.lower_bound_heuristic_pass ? 1 : 0};
}

gds_law out_law(const gds::AsymptoticLaw& l) {
  return {l.d,  l.a,   l.b,    l.m,     l.delta_margin, l.g0,   l.g1,
          l.rho, l.alpha, l.rate, l.power, l.log_scale,    l.tol};
}

gds::AsymptoticLaw in_law(const gds_law& c) {
  gds::AsymptoticLaw l;
  l.d = c.d;
  l.a = c.a;
  l.b = c.b;
  l.m = c.m;
  l.delta_margin = c.delta_margin;
  l.g0 = c.g0;
  l.g1 = c.g1;
  l.rho = c.rho;
  l.alpha = c.alpha;
  l.rate = c.rate;
  l.power = c.power;
  l.log_scale = c.log_scale;
  l.tol = c.tol;
  return l;
}

gds_condition out_cond(const gds::ConditionReport& r) {
  return {r.lhs, r.rhs, r.holds ? 1 : 0, r.margin};
}

gds::Shape in_shape(gds_shape s) {
  return s == GDS_SHAPE_COSH ? gds::Shape::Cosh : gds::Shape::SinhOverLinear;
}

}  // namespace

extern "C" {

const char* gds_last_error(void) { return g_last_error.c_str(); }

const char* gds_status_name(gds_status status) {
  switch (status) {
    case GDS_OK: return "ok";
    case GDS_ERR_NULL_ARGUMENT: return "null_argument";
    case GDS_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case GDS_ERR_POLE: return "pole";
    case GDS_ERR_UNSUPPORTED_REGION: return "unsupported_region";
    case GDS_ERR_SCHEMA: return "schema";
    case GDS_ERR_NOT_CONVERGED: return "not_converged";
    case GDS_ERR_NON_INTEGER_DEGREE: return "non_integer_degree";
    case GDS_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* gds_version(void) { return "0.1.0"; }

void gds_string_free(char* s) { std::free(s); }

// series

gds_status gds_series_zeta(gds_series** out) {
  return make_series(out, [] { return gds::Series::riemann_zeta(); });
}

gds_status gds_series_shifted_zeta(gds_series** out) {
  return make_series(out, [] { return gds::Series::shifted_zeta(); });
}

gds_status gds_series_dedekind(long long discriminant, gds_series** out) {
  return make_series(out, [&] { return gds::Series::dedekind_quadratic(discriminant); });
}

gds_status gds_series_dirichlet_kronecker(long long discriminant, gds_series** out) {
  return make_series(out, [&] {
    return gds::Series::dirichlet_l(gds::kronecker_character(discriminant),
                                    "L(s,chi_" + std::to_string(discriminant) + ")");
  });
}

gds_status gds_series_dirichlet(int modulus, const double* values, gds_series** out) {
  GDS_CHECK_NULL(values);
  return make_series(out, [&] {
    gds::require(modulus >= 1, "modulus must be >= 1");
    gds::Character chi;
    chi.modulus = modulus;
    chi.values.assign(values, values + modulus);
    return gds::Series::dirichlet_l(chi);
  });
}

gds_status gds_series_from_json(const char* text, gds_series** out) {
  GDS_CHECK_NULL(text);
  return make_series(out, [&] { return gds::parse_series_json(text); });
}

gds_status gds_series_load(const char* path, gds_series** out) {
  GDS_CHECK_NULL(path);
  return make_series(out, [&] { return gds::load_series_file(path); });
}

gds_status gds_series_from_terms(const char* name, const double* lambda, const double* a,
                                 size_t n, const gds_tail_bound* tail, gds_series** out) {
  GDS_CHECK_NULL(name);
  if (n > 0) {
    GDS_CHECK_NULL(lambda);
    GDS_CHECK_NULL(a);
  }
  return make_series(out, [&] {
    std::vector<gds::Term> terms(n);
    for (size_t i = 0; i < n; ++i) terms[i] = {lambda[i], a[i]};
    std::optional<gds::TailBound> tb;
    if (tail != nullptr && tail->type != GDS_TAIL_NONE) {
      gds::TailBound b;
      b.type = tail->type == GDS_TAIL_GEOMETRIC ? gds::TailBound::Type::Geometric
                                                : gds::TailBound::Type::IntegralTest;
      b.C = tail->C;
      b.kappa = tail->kappa;
      b.ratio = tail->ratio;
      b.sigma_min = tail->sigma_min;
      tb = b;
    }
    return gds::Series::from_terms(name, std::move(terms), tb);
  });
}

gds_status gds_series_merge(const gds_series* a, const gds_series* b, double sign, double cutoff,
                            gds_series** out) {
  GDS_CHECK_NULL(a);
  GDS_CHECK_NULL(b);
  return make_series(out, [&] { return gds::to_lambda_merge(a->impl, b->impl, sign, cutoff); });
}

void gds_series_free(gds_series* series) { delete series; }

const char* gds_series_name(const gds_series* series) {
  return series ? series->impl.name().c_str() : "";
}

const char* gds_series_family(const gds_series* series) {
  return series ? gds::family_name(series->impl.family()) : "";
}

int gds_series_has_pole(const gds_series* series) {
  return series && series->impl.has_pole() ? 1 : 0;
}

gds_status gds_series_to_json(const gds_series* series, char** out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = dup_string(gds::series_to_json(series->impl)); });
}

gds_status gds_evaluate(const gds_series* series, gds_complex s, double tol, gds_value* out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = out_v(gds::evaluate(series->impl, in(s), tol)); });
}

gds_status gds_derivative(const gds_series* series, gds_complex s, int order, double tol,
                          gds_value* out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = out_v(gds::derivative(series->impl, in(s), order, tol)); });
}

gds_status gds_residue(const gds_series* series, double tol, double* out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = gds::residue_at_pole(series->impl, tol); });
}

gds_status gds_check_class_b(const gds_series* series, int d, int n_zeros, double tol,
                             gds_class_b_report* out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(out);
  return guarded([&] {
    const auto r = gds::check_class_B(series->impl, d, n_zeros, tol);
    gds_class_b_report c{};
    c.all_pass = r.all_pass() ? 1 : 0;
    c.rho = r.rho;
    c.n_axioms = std::min<size_t>(r.axioms.size(), GDS_MAX_AXIOMS);
    for (size_t i = 0; i < c.n_axioms; ++i) {
      copy_string(c.axioms[i].id, sizeof c.axioms[i].id, r.axioms[i].id);
      copy_string(c.axioms[i].witness, sizeof c.axioms[i].witness, r.axioms[i].witness);
      c.axioms[i].pass = r.axioms[i].pass ? 1 : 0;
    }
    c.n_trivial_zeros = std::min<size_t>(r.trivial_zero_residuals.size(), GDS_MAX_TRIVIAL_ZEROS);
    for (size_t i = 0; i < c.n_trivial_zeros; ++i)
      c.trivial_zero_residuals[i] = r.trivial_zero_residuals[i];
    *out = c;
  });
}

// special functions

gds_status gds_log_gamma(gds_complex s, gds_complex* out) {
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = out_c(gds::log_gamma(in(s))); });
}

gds_status gds_stirling_log_gamma(double s, int terms, double* value, double* error_bound) {
  GDS_CHECK_NULL(value);
  return guarded([&] {
    const double v = gds::stirling_log_gamma(s, terms);
    const double e = gds::stirling_error_bound(s, terms);
    *value = v;
    if (error_bound) *error_bound = e;
  });
}

gds_status gds_gamma_bound(double sigma, double t_cut, double tol, gds_gamma_bound_report* out) {
  GDS_CHECK_NULL(out);
  return guarded([&] {
    const auto r = gds::gamma_ratio_bound_check(sigma, t_cut, tol);
    *out = {r.sigma, r.t_cut, r.integral_value, r.quadrature_error, r.tail_bound, r.bound_ratio};
  });
}

// growth

gds_status gds_profile_compute(const gds_series* series, const double* r_grid, size_t n,
                               int angular_resolution, double tol, gds_profile** out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(r_grid);
  GDS_CHECK_NULL(out);
  return guarded([&] {
    auto p = gds::max_modulus_profile(series->impl, std::span<const double>(r_grid, n),
                                      angular_resolution, tol);
    *out = new gds_profile{std::move(p)};
  });
}

gds_status gds_profile_from_samples(const double* r, const double* log_max, size_t n,
                                    gds_profile** out) {
  GDS_CHECK_NULL(r);
  GDS_CHECK_NULL(log_max);
  GDS_CHECK_NULL(out);
  return guarded([&] {
    gds::GrowthProfile p;
    for (size_t i = 0; i < n; ++i) p.samples.push_back({r[i], log_max[i], 0.0});
    *out = new gds_profile{std::move(p)};
  });
}

void gds_profile_free(gds_profile* profile) { delete profile; }

size_t gds_profile_size(const gds_profile* profile) {
  return profile ? profile->impl.samples.size() : 0;
}

gds_status gds_profile_sample_at(const gds_profile* profile, size_t i, gds_profile_sample* out) {
  GDS_CHECK_NULL(profile);
  GDS_CHECK_NULL(out);
  if (i >= profile->impl.samples.size())
    return set_error(GDS_ERR_INVALID_ARGUMENT, "profile index out of range");
  const auto& s = profile->impl.samples[i];
  *out = {s.r, s.log_max, s.argmax_angle};
  return GDS_OK;
}

gds_status gds_profile_to_csv(const gds_profile* profile, char** out) {
  GDS_CHECK_NULL(profile);
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = dup_string(gds::profile_to_csv(profile->impl)); });
}

gds_status gds_fit_invariants(const gds_profile* profile, int d_max, gds_invariants* out) {
  GDS_CHECK_NULL(profile);
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = out_inv(gds::fit_invariants(profile->impl, d_max)); });
}

gds_status gds_invariants_from_fe_json(const char* text, gds_invariants* out, double* raw_degree) {
  GDS_CHECK_NULL(text);
  GDS_CHECK_NULL(out);
  return guarded([&] {
    try {
      *out = out_inv(gds::invariants_from_fe(gds::parse_fe_json(text)));
    } catch (const gds::NonIntegerDegreeError& e) {
      if (raw_degree) *raw_degree = e.raw_degree();
      throw;
    }
  });
}

gds_status gds_invariants_builtin(const gds_series* series, gds_invariants* out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(out);
  return guarded([&] {
    const auto fe = gds::builtin_functional_equation(series->impl);
    if (!fe) gds::fail(gds::ErrorCode::UnsupportedRegion, "series has no built-in functional equation");
    *out = out_inv(gds::invariants_from_fe(*fe));
  });
}

gds_status gds_nominal_invariants(const gds_series* series, int* found, gds_invariants* out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(found);
  GDS_CHECK_NULL(out);
  return guarded([&] {
    const auto n = gds::nominal_invariants(series->impl);
    *found = n ? 1 : 0;
    if (n) *out = gds_invariants{n->d, n->alpha, n->q, 0.0, 0.0, 0.0, 0};
  });
}

// Beurling product

gds_status gds_log_f(const gds_series* series, int d, double x, double tol, gds_log_f_value* out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(out);
  return guarded([&] {
    const auto v = gds::log_f(gds::BeurlingProduct{series->impl, d}, x, tol);
    *out = {v.value, v.error, v.trunc_N};
  });
}

gds_status gds_psi(const gds_series* series, int d, gds_complex s, double tol, gds_complex* out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = out_c(gds::psi(series->impl, d, in(s), tol)); });
}

gds_status gds_principal_parts_of(const gds_series* series, int d, double tol,
                                  gds_principal_parts* out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(out);
  return guarded([&] {
    const auto p = gds::psi_principal_parts(series->impl, d, tol);
    *out = {p.c_minus2_at_0,     p.c_minus1_at_0,     p.residue_at_1,
            p.expected_c_minus2, p.expected_c_minus1, p.expected_residue};
  });
}

gds_status gds_mellin_check(gds_complex s, double tol, gds_mellin_result* out) {
  GDS_CHECK_NULL(out);
  return guarded([&] {
    const auto m = gds::mellin_identity_check(in(s), tol);
    *out = {out_c(m.lhs), out_c(m.rhs), m.abs_diff, m.quadrature_error};
  });
}

gds_status gds_asymptotic_constants(const gds_series* series, int d, double tol, gds_law* out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = out_law(gds::asymptotic_constants(series->impl, d, tol)); });
}

double gds_law_log_model(const gds_law* law, double x) {
  if (law == nullptr) return std::nan("");
  return in_law(*law).log_model(x);
}

gds_status gds_decay(const gds_series* series, const gds_law* law, const double* x, size_t n,
                     gds_decay_point* out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(law);
  GDS_CHECK_NULL(x);
  GDS_CHECK_NULL(out);
  return guarded([&] {
    const auto pts = gds::decay_verification(gds::BeurlingProduct{series->impl, law->d},
                                             in_law(*law), std::span<const double>(x, n));
    for (size_t i = 0; i < pts.size(); ++i) {
      const auto& p = pts[i];
      out[i] = gds_decay_point{p.x, p.log_f, p.log_model, p.residual_log,
                               p.cancellation_flag ? 1 : 0, {}};
      copy_string(out[i].method, sizeof out[i].method, p.method);
    }
  });
}

const char* gds_shape_name(gds_shape shape) { return gds::shape_name(in_shape(shape)); }

gds_status gds_candidate_value(gds_shape shape, double beta, double x, double* out) {
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = gds::candidate_value({in_shape(shape), beta}, x); });
}

gds_status gds_candidate_log_value(gds_shape shape, double beta, double x, double* out) {
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = gds::candidate_log_value({in_shape(shape), beta}, x); });
}

gds_status gds_match(const gds_series* series, const gds_law* law, const double* x, size_t n,
                     gds_match_result* out) {
  GDS_CHECK_NULL(series);
  GDS_CHECK_NULL(law);
  GDS_CHECK_NULL(x);
  GDS_CHECK_NULL(out);
  return guarded([&] {
    const auto m = gds::match_candidate(gds::BeurlingProduct{series->impl, law->d}, in_law(*law),
                                        std::span<const double>(x, n));
    *out = {m.best.shape == gds::Shape::Cosh ? GDS_SHAPE_COSH : GDS_SHAPE_SINH_OVER_LINEAR,
            m.best.beta,
            m.max_abs_log_diff,
            m.sinh_distance,
            m.cosh_distance,
            m.matched ? 1 : 0,
            m.exploratory ? 1 : 0,
            m.candidate_count};
  });
}

// conditions

gds_status gds_main_condition(double alpha, double rho, int d, gds_condition* out) {
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = out_cond(gds::main_condition(alpha, rho, d)); });
}

gds_status gds_selberg_sharp_condition(double q, double rho, int d, gds_condition* out) {
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = out_cond(gds::selberg_sharp_condition(q, rho, d)); });
}

gds_status gds_dedekind_condition(double abs_disc, int n, double rho, gds_condition* out) {
  GDS_CHECK_NULL(out);
  return guarded([&] { *out = out_cond(gds::dedekind_condition(abs_disc, n, rho)); });
}

}  // extern "C"
