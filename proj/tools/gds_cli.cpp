// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0
//
// gds: command-line front end over the C API.

#include <unistd.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gds/gds.h"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kSchema = 2, kEval = 3, kCheckFailed = 4, kNonInteger = 5 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(gds_status st) {
  switch (st) {
    case GDS_ERR_SCHEMA: return kSchema;
    case GDS_ERR_NON_INTEGER_DEGREE: return kNonInteger;
    default: return kEval;
  }
}

void check(gds_status st) {
  if (st != GDS_OK) throw Failure{exit_for(st), std::string(gds_status_name(st)) + ": " + gds_last_error()};
}

void usage_error(const std::string& msg) { throw Failure{kUsage, msg}; }

// 15 significant digits; the shortest round-trip form of the rounded value
// is what ends up in the JSON text.
double sig15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return sig15(v);
}

json cnum(gds_complex z) { return json{{"re", num(z.re)}, {"im", num(z.im)}}; }

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

struct SeriesDeleter {
  void operator()(gds_series* s) const { gds_series_free(s); }
};
using SeriesPtr = std::unique_ptr<gds_series, SeriesDeleter>;

struct ProfileDeleter {
  void operator()(gds_profile* p) const { gds_profile_free(p); }
};
using ProfilePtr = std::unique_ptr<gds_profile, ProfileDeleter>;

struct Options {
  std::string builtin;
  long long disc = 0;
  std::string series_path;
  int d = 0;
  double s = 0.0;
  double t = 0.0;
  bool s_given = false;
  int order = 0;
  double tol = 1e-8;
  std::string out;
  std::string format = "json";
  bool fit = false;
  std::string fe;
  std::vector<double> r_grid{5, 8, 12, 16, 20};
  int resolution = 360;
  int d_max = 4;
  std::vector<double> x_grid;
  std::vector<double> sigmas{2, 3, 4, 5, 6, 7, 8, 9, 10};
  double t_cut = 40.0;
  double alpha = NAN;
  double rho = NAN;
  double q = NAN;
  double abs_disc = NAN;
  int n = 2;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Written once: a sibling temp file renamed over the target.
void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::string tmp = opt.out + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Failure{kUsage, "cannot write " + tmp};
    f << text;
    f.close();
    if (!f) throw Failure{kUsage, "write failed: " + tmp};
  }
  std::error_code ec;
  std::filesystem::rename(tmp, opt.out, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Failure{kUsage, "cannot rename onto " + opt.out + ": " + ec.message()};
  }
}

void emit_json(const Options& opt, const json& j) { emit(opt, j.dump(2) + "\n"); }

bool wants_csv(const Options& opt) { return opt.format == "csv"; }

bool has_series_choice(const Options& opt) { return !opt.builtin.empty() || !opt.series_path.empty(); }

SeriesPtr open_series(const Options& opt) {
  if (!opt.builtin.empty() && !opt.series_path.empty())
    usage_error("--builtin and --series are mutually exclusive");
  gds_series* raw = nullptr;
  if (!opt.series_path.empty()) {
    check(gds_series_load(opt.series_path.c_str(), &raw));
  } else if (opt.builtin == "zeta") {
    check(gds_series_zeta(&raw));
  } else if (opt.builtin == "shifted_zeta") {
    check(gds_series_shifted_zeta(&raw));
  } else if (opt.builtin == "dedekind" || opt.builtin == "dirichlet") {
    if (opt.disc == 0) usage_error("--builtin " + opt.builtin + " needs --disc");
    if (opt.builtin == "dedekind")
      check(gds_series_dedekind(opt.disc, &raw));
    else
      check(gds_series_dirichlet_kronecker(opt.disc, &raw));
  } else if (opt.builtin.empty()) {
    usage_error("one of --builtin or --series is required");
  } else {
    usage_error("unknown builtin '" + opt.builtin + "'");
  }
  return SeriesPtr(raw);
}

int degree_for(const Options& opt, const gds_series* s) {
  if (opt.d > 0) return opt.d;
  int found = 0;
  gds_invariants inv{};
  check(gds_nominal_invariants(s, &found, &inv));
  return found ? inv.d : 1;
}

std::vector<double> default_x_grid(const Options& opt) {
  if (!opt.x_grid.empty()) return opt.x_grid;
  return {1, 2, 3, 4, 5, 6};
}

json series_header(const char* command, const gds_series* s) {
  return json{{"command", command}, {"series", gds_series_name(s)}, {"family", gds_series_family(s)}};
}

json law_json(const gds_law& law) {
  return json{{"d", law.d},
              {"a", num(law.a)},
              {"b", num(law.b)},
              {"m", num(law.m)},
              {"delta_margin", num(law.delta_margin)},
              {"g0", num(law.g0)},
              {"g1", num(law.g1)},
              {"rho", num(law.rho)},
              {"alpha", num(law.alpha)},
              {"rate", num(law.rate)},
              {"power", num(law.power)},
              {"log_scale", num(law.log_scale)}};
}

json decay_json(const gds_decay_point& p) {
  return json{{"x", num(p.x)},
              {"log_f", num(p.log_f)},
              {"log_model", num(p.log_model)},
              {"residual_log", num(p.residual_log)},
              {"cancellation_flag", p.cancellation_flag != 0},
              {"method", p.method}};
}

json condition_json(const gds_condition& c) {
  return json{{"lhs", num(c.lhs)}, {"rhs", num(c.rhs)}, {"holds", c.holds != 0}, {"margin", num(c.margin)}};
}

json invariants_json(const gds_invariants& inv) {
  return json{{"d", inv.d},
              {"alpha", num(inv.alpha)},
              {"q", num(inv.q)},
              {"fit_residual", num(inv.fit_residual)}};
}

std::vector<gds_decay_point> run_decay(const gds_series* s, const gds_law& law,
                                       const std::vector<double>& xs) {
  std::vector<gds_decay_point> pts(xs.size());
  check(gds_decay(s, &law, xs.data(), xs.size(), pts.data()));
  return pts;
}

const double kMellinPoints[] = {0.5, 1.0, 1.5};
constexpr double kLawTol = 1e-12;
constexpr double kPrincipalTol = 1e-6;
constexpr double kSlopeSlack = 0.1;

// ---- eval ----

int cmd_eval(const Options& opt) {
  if (!opt.s_given) usage_error("eval needs --s");
  auto s = open_series(opt);
  gds_value v{};
  const gds_complex z{opt.s, opt.t};
  if (opt.order == 0)
    check(gds_evaluate(s.get(), z, opt.tol, &v));
  else
    check(gds_derivative(s.get(), z, opt.order, opt.tol, &v));
  if (wants_csv(opt)) {
    emit(opt, "s_re,s_im,order,value_re,value_im,error\n" + csv_num(opt.s) + "," + csv_num(opt.t) +
                  "," + std::to_string(opt.order) + "," + csv_num(v.value.re) + "," +
                  csv_num(v.value.im) + "," + csv_num(v.error) + "\n");
    return kOk;
  }
  json j = series_header("eval", s.get());
  j["s"] = cnum(z);
  j["order"] = opt.order;
  j["value"] = num(v.value.re);
  j["value_im"] = num(v.value.im);
  j["error_bound"] = num(v.error);
  j["tol"] = num(opt.tol);
  emit_json(opt, j);
  return kOk;
}

// ---- verify ----

struct Suite {
  json checks = json::array();
  std::vector<std::string> failed;

  // Runs body; an exception inside counts as a failed check.
  template <class F>
  void run(const std::string& id, bool exploratory, F&& body) {
    json c{{"id", id}, {"exploratory", exploratory}};
    bool pass = false;
    try {
      pass = body(c);
    } catch (const Failure& f) {
      c["witness"] = f.message;
    }
    c["pass"] = pass;
    if (!pass && !exploratory) failed.push_back(id);
    checks.push_back(std::move(c));
  }

  void skip(const std::string& id, const std::string& why) {
    checks.push_back(json{{"id", id}, {"exploratory", false}, {"skipped", why}, {"pass", nullptr}});
  }
};

int cmd_verify(const Options& opt) {
  if (opt.builtin.empty()) usage_error("verify needs --builtin");
  auto s = open_series(opt);
  const int d = degree_for(opt, s.get());
  const bool exploratory = d >= 2;
  const std::vector<double> xs = default_x_grid(opt);
  Suite suite;
  json report = series_header("verify", s.get());
  report["d"] = d;
  report["tol"] = num(opt.tol);

  bool in_class_b = false;
  double rho = 0.0;
  suite.run("class_b", false, [&](json& c) {
    gds_class_b_report r{};
    check(gds_check_class_b(s.get(), d, GDS_MAX_TRIVIAL_ZEROS, opt.tol, &r));
    json axioms = json::array();
    std::string witness;
    for (size_t i = 0; i < r.n_axioms; ++i) {
      json a{{"id", r.axioms[i].id}, {"pass", r.axioms[i].pass != 0}};
      if (!r.axioms[i].pass) {
        a["witness"] = r.axioms[i].witness;
        if (witness.empty()) witness = std::string(r.axioms[i].id) + ": " + r.axioms[i].witness;
      }
      axioms.push_back(a);
    }
    json zeros = json::array();
    for (size_t i = 0; i < r.n_trivial_zeros; ++i) zeros.push_back(num(r.trivial_zero_residuals[i]));
    c["rho"] = num(r.rho);
    c["axioms"] = axioms;
    c["trivial_zero_residuals"] = zeros;
    if (!witness.empty()) c["witness"] = witness;
    in_class_b = r.all_pass != 0;
    rho = r.rho;
    return in_class_b;
  });

  suite.run("mellin_identity", false, [&](json& c) {
    json pts = json::array();
    bool ok = true;
    for (const double sv : kMellinPoints) {
      gds_mellin_result m{};
      check(gds_mellin_check({sv, 0.0}, 1e-3 * opt.tol, &m));
      pts.push_back(json{{"s", num(sv)}, {"lhs", cnum(m.lhs)}, {"rhs", cnum(m.rhs)}, {"abs_diff", num(m.abs_diff)}});
      if (!(m.abs_diff <= opt.tol)) {
        ok = false;
        c["witness"] = "abs_diff=" + csv_num(m.abs_diff) + " at s=" + csv_num(sv);
      }
    }
    c["points"] = pts;
    return ok;
  });

  suite.run("gamma_bound", false, [&](json& c) {
    json rows = json::array();
    double max_ratio = 0.0;
    bool ok = true;
    for (const double sigma : opt.sigmas) {
      gds_gamma_bound_report r{};
      check(gds_gamma_bound(sigma, opt.t_cut, 1e-10, &r));
      rows.push_back(json{{"sigma", num(sigma)}, {"bound_ratio", num(r.bound_ratio)}});
      if (!(std::isfinite(r.bound_ratio) && r.bound_ratio > 0.0)) {
        ok = false;
        c["witness"] = "bound_ratio=" + csv_num(r.bound_ratio) + " at sigma=" + csv_num(sigma);
      }
      max_ratio = std::max(max_ratio, r.bound_ratio);
    }
    c["sweep"] = rows;
    c["max_bound_ratio"] = num(max_ratio);
    return ok;
  });

  const std::string not_b = "series is not in class B";
  gds_law law{};
  bool have_law = false;
  if (!in_class_b) {
    for (const char* id : {"principal_parts", "asymptotic_law", "decay", "candidate_match"})
      suite.skip(id, not_b);
  } else {
    suite.run("principal_parts", exploratory, [&](json& c) {
      gds_principal_parts p{};
      check(gds_principal_parts_of(s.get(), d, kLawTol, &p));
      c["c_minus2_at_0"] = num(p.c_minus2_at_0);
      c["expected_c_minus2"] = num(p.expected_c_minus2);
      c["c_minus1_at_0"] = num(p.c_minus1_at_0);
      c["expected_c_minus1"] = num(p.expected_c_minus1);
      c["residue_at_1"] = num(p.residue_at_1);
      c["expected_residue"] = num(p.expected_residue);
      const auto close = [](double a, double b) {
        return std::fabs(a - b) <= kPrincipalTol * std::max(1.0, std::fabs(b));
      };
      const bool ok = close(p.c_minus2_at_0, p.expected_c_minus2) &&
                      close(p.c_minus1_at_0, p.expected_c_minus1) &&
                      close(p.residue_at_1, p.expected_residue);
      if (!ok) c["witness"] = "principal parts differ from 2d^2 g(0), 2d^2 g'(0), pi rho d / sin(pi/2d)";
      return ok;
    });

    suite.run("asymptotic_law", false, [&](json& c) {
      check(gds_asymptotic_constants(s.get(), d, kLawTol, &law));
      have_law = true;
      c["law"] = law_json(law);
      const bool ok = std::isfinite(law.a) && std::isfinite(law.b) && law.b > 0.0 && law.m > 0.0;
      if (!ok) c["witness"] = "non-finite or non-positive constants";
      return ok;
    });

    if (!have_law) {
      suite.skip("decay", "no asymptotic law");
      suite.skip("candidate_match", "no asymptotic law");
    } else {
      suite.run("decay", exploratory, [&](json& c) {
        const auto pts = run_decay(s.get(), law, xs);
        json arr = json::array();
        for (const auto& p : pts) arr.push_back(decay_json(p));
        c["points"] = arr;
        // residual slope against the decay margin; with alpha unknown only
        // a decreasing residual is required
        const double bound = std::isfinite(law.delta_margin) ? -(law.delta_margin - kSlopeSlack) : 0.0;
        c["slope_bound"] = num(bound);
        json slopes = json::array();
        bool ok = true;
        for (size_t i = 0; i < pts.size(); ++i) {
          if (!std::isfinite(pts[i].residual_log)) {
            ok = false;
            c["witness"] = "residual unavailable at x=" + csv_num(pts[i].x);
            continue;
          }
          if (i == 0 || !std::isfinite(pts[i - 1].residual_log)) continue;
          const double slope = (pts[i].residual_log - pts[i - 1].residual_log) / (pts[i].x - pts[i - 1].x);
          slopes.push_back(num(slope));
          if (!(slope <= bound)) {
            ok = false;
            c["witness"] = "slope " + csv_num(slope) + " > " + csv_num(bound) + " on [" +
                           csv_num(pts[i - 1].x) + ", " + csv_num(pts[i].x) + "]";
          }
        }
        c["slopes"] = slopes;
        return ok;
      });

      suite.run("candidate_match", exploratory, [&](json& c) {
        std::vector<double> grid;
        for (double x = 1.0; x <= 6.0 + 1e-9; x += 0.25) grid.push_back(x);
        gds_match_result m{};
        check(gds_match(s.get(), &law, grid.data(), grid.size(), &m));
        c["best"] = gds_shape_name(m.best);
        c["beta"] = num(m.beta);
        c["max_abs_log_diff"] = num(m.max_abs_log_diff);
        c["sinh_distance"] = num(m.sinh_distance);
        c["cosh_distance"] = num(m.cosh_distance);
        c["candidate_count"] = m.candidate_count;
        c["matched"] = m.matched != 0;
        report["matched_form"] = m.matched ? json(gds_shape_name(m.best)) : json(nullptr);
        if (!m.matched) c["witness"] = "no candidate within 1e-3 in log";
        return m.matched != 0;
      });
    }
  }

  // Conditions are hypotheses: recorded, never failed.
  json conds = json::object();
  int found = 0;
  gds_invariants nominal{};
  check(gds_nominal_invariants(s.get(), &found, &nominal));
  if (found && rho > opt.tol) {
    gds_condition c{};
    check(gds_main_condition(nominal.alpha, rho, d, &c));
    conds["main_condition"] = condition_json(c);
    check(gds_selberg_sharp_condition(nominal.q, rho, d, &c));
    conds["selberg_sharp_condition"] = condition_json(c);
    if (std::string(gds_series_family(s.get())) == "dedekind_quadratic") {
      check(gds_dedekind_condition(std::fabs(static_cast<double>(opt.disc)), 2, rho, &c));
      conds["dedekind_condition"] = condition_json(c);
    }
  } else {
    conds["not_applicable"] = "needs nominal invariants and a positive residue";
  }
  report["conditions"] = conds;
  if (!report.contains("matched_form")) report["matched_form"] = nullptr;
  report["checks"] = suite.checks;
  report["failed"] = suite.failed;
  report["passed"] = suite.failed.empty();
  emit_json(opt, report);
  return suite.failed.empty() ? kOk : kCheckFailed;
}

// ---- invariants ----

int cmd_invariants(const Options& opt) {
  if (!opt.fe.empty()) {
    if (has_series_choice(opt)) usage_error("--fe excludes --builtin/--series");
    const std::string text = read_file(opt.fe);
    gds_invariants inv{};
    double raw = NAN;
    const gds_status st = gds_invariants_from_fe_json(text.c_str(), &inv, &raw);
    if (st == GDS_ERR_NON_INTEGER_DEGREE) {
      emit_json(opt, json{{"command", "invariants"},
                          {"source", "functional_equation"},
                          {"error", "non_integer_degree"},
                          {"raw_degree", num(raw)}});
      throw Failure{kNonInteger, gds_last_error()};
    }
    check(st);
    json j{{"command", "invariants"}, {"source", "functional_equation"}};
    j.update(invariants_json(inv));
    emit_json(opt, j);
    return kOk;
  }
  auto s = open_series(opt);
  json j = series_header("invariants", s.get());
  if (!opt.fit) {
    gds_invariants inv{};
    check(gds_invariants_builtin(s.get(), &inv));
    j["source"] = "functional_equation";
    j.update(invariants_json(inv));
    emit_json(opt, j);
    return kOk;
  }
  gds_profile* raw = nullptr;
  check(gds_profile_compute(s.get(), opt.r_grid.data(), opt.r_grid.size(), opt.resolution, opt.tol, &raw));
  ProfilePtr profile(raw);
  if (wants_csv(opt)) {
    char* csv = nullptr;
    check(gds_profile_to_csv(profile.get(), &csv));
    std::string text(csv);
    gds_string_free(csv);
    emit(opt, text);
    return kOk;
  }
  gds_invariants inv{};
  check(gds_fit_invariants(profile.get(), opt.d_max, &inv));
  j["source"] = "profile_fit";
  j.update(invariants_json(inv));
  j["perturbed_residual"] = num(inv.perturbed_residual);
  j["residual_ratio"] = num(inv.residual_ratio);
  j["lower_bound_heuristic_pass"] = inv.lower_bound_heuristic_pass != 0;
  json samples = json::array();
  for (size_t i = 0; i < gds_profile_size(profile.get()); ++i) {
    gds_profile_sample p{};
    check(gds_profile_sample_at(profile.get(), i, &p));
    samples.push_back(json{{"r", num(p.r)}, {"log_max", num(p.log_max)}, {"argmax_angle", num(p.argmax_angle)}});
  }
  j["profile"] = samples;
  int found = 0;
  gds_invariants nominal{};
  check(gds_nominal_invariants(s.get(), &found, &nominal));
  j["nominal"] = found ? json{{"d", nominal.d}, {"alpha", num(nominal.alpha)}, {"q", num(nominal.q)}} : json(nullptr);
  emit_json(opt, j);
  return kOk;
}

// ---- beurling ----

int cmd_product(const Options& opt) {
  auto s = open_series(opt);
  const int d = degree_for(opt, s.get());
  const auto xs = default_x_grid(opt);
  std::string csv = "x,log_f,error,trunc_n\n";
  json rows = json::array();
  for (const double x : xs) {
    gds_log_f_value v{};
    check(gds_log_f(s.get(), d, x, opt.tol, &v));
    csv += csv_num(x) + "," + csv_num(v.value) + "," + csv_num(v.error) + "," + std::to_string(v.trunc_n) + "\n";
    rows.push_back(json{{"x", num(x)}, {"log_f", num(v.value)}, {"error", num(v.error)}, {"trunc_n", v.trunc_n}});
  }
  if (wants_csv(opt)) {
    emit(opt, csv);
    return kOk;
  }
  json j = series_header("beurling product", s.get());
  j["d"] = d;
  j["points"] = rows;
  emit_json(opt, j);
  return kOk;
}

int cmd_asymptote(const Options& opt) {
  auto s = open_series(opt);
  const int d = degree_for(opt, s.get());
  gds_law law{};
  check(gds_asymptotic_constants(s.get(), d, std::min(opt.tol, kLawTol), &law));
  json j = series_header("beurling asymptote", s.get());
  j["law"] = law_json(law);
  j["exploratory"] = d >= 2;
  emit_json(opt, j);
  return kOk;
}

int cmd_decay(const Options& opt) {
  auto s = open_series(opt);
  const int d = degree_for(opt, s.get());
  gds_law law{};
  check(gds_asymptotic_constants(s.get(), d, kLawTol, &law));
  const auto pts = run_decay(s.get(), law, default_x_grid(opt));
  if (wants_csv(opt)) {
    std::string csv = "x,log_f,log_model,residual_log,cancellation_flag,method\n";
    for (const auto& p : pts)
      csv += csv_num(p.x) + "," + csv_num(p.log_f) + "," + csv_num(p.log_model) + "," +
             csv_num(p.residual_log) + "," + std::to_string(p.cancellation_flag) + "," + p.method + "\n";
    emit(opt, csv);
    return kOk;
  }
  json j = series_header("beurling decay", s.get());
  j["law"] = law_json(law);
  j["exploratory"] = d >= 2;
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(decay_json(p));
  j["points"] = arr;
  emit_json(opt, j);
  return kOk;
}

// ---- mellin, gamma-bound, conditions ----

int cmd_mellin(const Options& opt) {
  std::vector<gds_complex> pts;
  if (opt.s_given)
    pts.push_back({opt.s, opt.t});
  else
    for (const double sv : kMellinPoints) pts.push_back({sv, 0.0});
  json rows = json::array();
  bool ok = true;
  for (const auto& z : pts) {
    gds_mellin_result m{};
    check(gds_mellin_check(z, 1e-3 * opt.tol, &m));
    const bool pass = m.abs_diff <= opt.tol;
    ok = ok && pass;
    rows.push_back(json{{"s", cnum(z)},
                        {"lhs", cnum(m.lhs)},
                        {"rhs", cnum(m.rhs)},
                        {"abs_diff", num(m.abs_diff)},
                        {"quadrature_error", num(m.quadrature_error)},
                        {"pass", pass}});
  }
  emit_json(opt, json{{"command", "mellin"}, {"tol", num(opt.tol)}, {"points", rows}, {"passed", ok}});
  return ok ? kOk : kCheckFailed;
}

int cmd_gamma_bound(const Options& opt) {
  json rows = json::array();
  std::string csv = "sigma,t_cut,integral,quadrature_error,tail_bound,bound_ratio\n";
  double max_ratio = 0.0;
  bool ok = true;
  for (const double sigma : opt.sigmas) {
    gds_gamma_bound_report r{};
    check(gds_gamma_bound(sigma, opt.t_cut, std::min(opt.tol, 1e-10), &r));
    ok = ok && std::isfinite(r.bound_ratio) && r.bound_ratio > 0.0;
    max_ratio = std::max(max_ratio, r.bound_ratio);
    csv += csv_num(sigma) + "," + csv_num(r.t_cut) + "," + csv_num(r.integral_value) + "," +
           csv_num(r.quadrature_error) + "," + csv_num(r.tail_bound) + "," + csv_num(r.bound_ratio) + "\n";
    rows.push_back(json{{"sigma", num(sigma)},
                        {"t_cut", num(r.t_cut)},
                        {"integral", num(r.integral_value)},
                        {"quadrature_error", num(r.quadrature_error)},
                        {"tail_bound", num(r.tail_bound)},
                        {"bound_ratio", num(r.bound_ratio)}});
  }
  if (wants_csv(opt)) {
    emit(opt, csv);
  } else {
    emit_json(opt, json{{"command", "gamma-bound"},
                        {"sweep", rows},
                        {"max_bound_ratio", num(max_ratio)},
                        {"passed", ok}});
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_conditions(const Options& opt) {
  json j{{"command", "conditions"}};
  double alpha = opt.alpha, rho = opt.rho, q = opt.q, abs_disc = opt.abs_disc;
  int d = opt.d > 0 ? opt.d : 1;
  if (has_series_choice(opt)) {
    auto s = open_series(opt);
    j = series_header("conditions", s.get());
    d = degree_for(opt, s.get());
    int found = 0;
    gds_invariants nominal{};
    check(gds_nominal_invariants(s.get(), &found, &nominal));
    if (found) {
      if (std::isnan(alpha)) alpha = nominal.alpha;
      if (std::isnan(q)) q = nominal.q;
    }
    if (std::isnan(rho)) check(gds_residue(s.get(), 1e-12, &rho));
    if (std::isnan(abs_disc) && std::string(gds_series_family(s.get())) == "dedekind_quadratic")
      abs_disc = std::fabs(static_cast<double>(opt.disc));
  }
  if (std::isnan(q) && !std::isnan(alpha)) q = std::pow(2.0 * M_PI, d) / alpha;
  if (std::isnan(alpha) && !std::isnan(q)) alpha = std::pow(2.0 * M_PI, d) / q;
  if (std::isnan(rho) || (std::isnan(alpha) && std::isnan(abs_disc)))
    usage_error("conditions needs a series or --rho with --alpha/--q or --abs-disc");
  j["d"] = d;
  j["rho"] = num(rho);
  gds_condition c{};
  if (!std::isnan(alpha)) {
    j["alpha"] = num(alpha);
    j["q"] = num(q);
    check(gds_main_condition(alpha, rho, d, &c));
    j["main_condition"] = condition_json(c);
    check(gds_selberg_sharp_condition(q, rho, d, &c));
    j["selberg_sharp_condition"] = condition_json(c);
  }
  if (!std::isnan(abs_disc)) {
    check(gds_dedekind_condition(abs_disc, opt.n, rho, &c));
    j["dedekind_condition"] = condition_json(c);
  }
  emit_json(opt, j);
  return kOk;
}

void add_series_flags(CLI::App* app, Options& opt) {
  app->add_option("--builtin", opt.builtin, "zeta | shifted_zeta | dedekind | dirichlet")
      ->check(CLI::IsMember({"zeta", "shifted_zeta", "dedekind", "dirichlet"}));
  app->add_option("--disc", opt.disc, "fundamental discriminant for dedekind / dirichlet");
  app->add_option("--series", opt.series_path, "series definition JSON file");
  app->add_option("--d", opt.d, "degree used for the product (default: the family's)")
      ->check(CLI::Range(1, 4));
}

void add_common_flags(CLI::App* app, Options& opt) {
  app->add_option("--tol", opt.tol, "absolute tolerance")->check(CLI::PositiveNumber);
  app->add_option("--out", opt.out, "write the report here (atomically) instead of stdout");
  app->add_option("--format", opt.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gds: general Dirichlet series, growth invariants and Beurling products"};
  app.require_subcommand(1);
  Options opt;

  auto* eval = app.add_subcommand("eval", "evaluate F(s) or a derivative");
  add_series_flags(eval, opt);
  add_common_flags(eval, opt);
  eval->add_option("--s", opt.s, "real part of s");
  eval->add_option("--t", opt.t, "imaginary part of s");
  eval->add_option("--order", opt.order, "derivative order")->check(CLI::Range(0, 4));

  auto* verify = app.add_subcommand("verify", "run the verification suite for a built-in family");
  add_series_flags(verify, opt);
  add_common_flags(verify, opt);
  verify->add_option("--x", opt.x_grid, "decay grid")->expected(1, -1);

  auto* invariants = app.add_subcommand("invariants", "degree and conductor");
  add_series_flags(invariants, opt);
  add_common_flags(invariants, opt);
  invariants->add_flag("--fit", opt.fit, "fit a max-modulus profile instead of using the functional equation");
  invariants->add_option("--fe", opt.fe, "functional-equation JSON file");
  invariants->add_option("--r-grid", opt.r_grid, "profile radii")->expected(1, -1);
  invariants->add_option("--resolution", opt.resolution, "angular samples per circle")->check(CLI::Range(360, 1 << 20));
  invariants->add_option("--d-max", opt.d_max, "largest degree tried")->check(CLI::Range(1, 8));

  auto* beurling = app.add_subcommand("beurling", "Beurling product f(z)");
  beurling->require_subcommand(1);
  auto* product = beurling->add_subcommand("product", "log f(x) on a grid");
  auto* asymptote = beurling->add_subcommand("asymptote", "constants of the real-axis law");
  auto* decay = beurling->add_subcommand("decay", "residual of the law on a grid");
  for (auto* sub : {product, asymptote, decay}) {
    add_series_flags(sub, opt);
    add_common_flags(sub, opt);
  }
  product->add_option("--x", opt.x_grid, "x grid")->expected(1, -1);
  decay->add_option("--x", opt.x_grid, "x grid")->expected(1, -1);

  auto* mellin = app.add_subcommand("mellin", "kernel identity check");
  add_common_flags(mellin, opt);
  mellin->add_option("--s", opt.s, "real part of s");
  mellin->add_option("--t", opt.t, "imaginary part of s");

  auto* gamma_bound = app.add_subcommand("gamma-bound", "integral of |Gamma(sigma + 2 + it)| sweep");
  add_common_flags(gamma_bound, opt);
  gamma_bound->add_option("--sigma", opt.sigmas, "sigma values")->expected(1, -1);
  gamma_bound->add_option("--t-cut", opt.t_cut, "initial quadrature half-width")->check(CLI::PositiveNumber);

  auto* conditions = app.add_subcommand("conditions", "uniqueness conditions");
  add_series_flags(conditions, opt);
  add_common_flags(conditions, opt);
  conditions->add_option("--alpha", opt.alpha);
  conditions->add_option("--rho", opt.rho);
  conditions->add_option("--q", opt.q);
  conditions->add_option("--abs-disc", opt.abs_disc);
  conditions->add_option("--n", opt.n, "field degree for the discriminant condition");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  opt.s_given = eval->count("--s") > 0 || mellin->count("--s") > 0;

  try {
    if (eval->parsed()) return cmd_eval(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (invariants->parsed()) return cmd_invariants(opt);
    if (product->parsed()) return cmd_product(opt);
    if (asymptote->parsed()) return cmd_asymptote(opt);
    if (decay->parsed()) return cmd_decay(opt);
    if (mellin->parsed()) return cmd_mellin(opt);
    if (gamma_bound->parsed()) return cmd_gamma_bound(opt);
    if (conditions->parsed()) return cmd_conditions(opt);
  } catch (const Failure& f) {
    std::cerr << "gds: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "gds: " << e.what() << "\n";
    return kEval;
  }
  return kUsage;
}
