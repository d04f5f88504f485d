// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#include "series_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "error.hpp"
#include "kronecker.hpp"

namespace gds {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& pointer, const std::string& what) {
  fail(ErrorCode::Schema, "field " + pointer + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& at) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_fail(at + "/" + key, "missing");
  return *it;
}

double number(const json& v, const std::string& at) {
  if (!v.is_number()) schema_fail(at, "expected a number, got " + std::string(v.type_name()));
  const double x = v.get<double>();
  if (!std::isfinite(x)) schema_fail(at, "must be finite");
  return x;
}

long long integer(const json& v, const std::string& at) {
  if (!v.is_number_integer()) schema_fail(at, "expected an integer");
  return v.get<long long>();
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& at) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) schema_fail(at + "/" + key, "unknown field");
  }
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

TailBound parse_tail(const json& tb) {
  if (!tb.is_object()) schema_fail("/tail_bound", "expected an object");
  check_keys(tb, {"type", "params"}, "/tail_bound");
  const auto& type = member(tb, "type", "/tail_bound");
  if (!type.is_string()) schema_fail("/tail_bound/type", "expected a string");
  const auto& params = member(tb, "params", "/tail_bound");
  if (!params.is_object()) schema_fail("/tail_bound/params", "expected an object");
  TailBound out;
  const std::string at = "/tail_bound/params";
  const auto t = type.get<std::string>();
  if (t == "integral_test") {
    check_keys(params, {"C", "kappa"}, at);
    out.type = TailBound::Type::IntegralTest;
    out.C = number(member(params, "C", at), at + "/C");
    out.kappa = number(member(params, "kappa", at), at + "/kappa");
  } else if (t == "geometric") {
    check_keys(params, {"C", "ratio", "sigma_min"}, at);
    out.type = TailBound::Type::Geometric;
    out.C = number(member(params, "C", at), at + "/C");
    out.ratio = number(member(params, "ratio", at), at + "/ratio");
    out.sigma_min = number(member(params, "sigma_min", at), at + "/sigma_min");
    if (!(out.ratio > 0.0 && out.ratio < 1.0)) schema_fail(at + "/ratio", "must lie in (0, 1)");
  } else {
    schema_fail("/tail_bound/type",
                "expected \"integral_test\" or \"geometric\", got \"" + t + "\"");
  }
  if (out.C < 0.0) schema_fail(at + "/C", "must be >= 0");
  return out;
}

}  // namespace

Series parse_series_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    fail(ErrorCode::Schema, "line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": malformed JSON");
  }
  if (!doc.is_object()) schema_fail("/", "expected an object");
  check_keys(doc, {"name", "family", "params", "terms", "tail_bound"}, "");

  const auto& name = member(doc, "name", "");
  if (!name.is_string()) schema_fail("/name", "expected a string");
  const auto& family = member(doc, "family", "");
  if (!family.is_string()) schema_fail("/family", "expected a string");
  json params = json::object();
  if (doc.contains("params")) {
    params = doc["params"];
    if (!params.is_object()) schema_fail("/params", "expected an object");
  }
  const bool has_terms = doc.contains("terms") && !doc["terms"].empty();
  const bool has_tail = doc.contains("tail_bound") && !doc["tail_bound"].is_null();

  const auto fam = family.get<std::string>();
  if (fam != "explicit") {
    if (has_terms) schema_fail("/terms", "only explicit series list terms");
    if (has_tail) schema_fail("/tail_bound", "only explicit series carry a tail bound");
  }
  try {
    if (fam == "riemann_zeta") {
      check_keys(params, {}, "/params");
      return Series::riemann_zeta();
    }
    if (fam == "shifted_zeta") {
      check_keys(params, {}, "/params");
      return Series::shifted_zeta();
    }
    if (fam == "dedekind_quadratic") {
      check_keys(params, {"discriminant"}, "/params");
      const auto D = integer(member(params, "discriminant", "/params"), "/params/discriminant");
      if (!is_fundamental_discriminant(D)) {
        schema_fail("/params/discriminant", std::to_string(D) + " is not a fundamental discriminant");
      }
      return Series::dedekind_quadratic(D);
    }
    if (fam == "dirichlet_L") {
      check_keys(params, {"modulus", "values", "discriminant"}, "/params");
      if (params.contains("discriminant")) {
        const auto D = integer(params["discriminant"], "/params/discriminant");
        if (!is_fundamental_discriminant(D)) {
          schema_fail("/params/discriminant", std::to_string(D) + " is not a fundamental discriminant");
        }
        return Series::dirichlet_l(kronecker_character(D), name.get<std::string>());
      }
      const auto q = integer(member(params, "modulus", "/params"), "/params/modulus");
      if (q < 1) schema_fail("/params/modulus", "must be >= 1");
      const auto& values = member(params, "values", "/params");
      if (!values.is_array() || static_cast<long long>(values.size()) != q) {
        schema_fail("/params/values", "expected an array of length modulus");
      }
      Character chi;
      chi.modulus = static_cast<int>(q);
      chi.values.clear();
      for (std::size_t i = 0; i < values.size(); ++i) {
        const auto at = "/params/values/" + std::to_string(i);
        const double v = number(values[i], at);
        if (std::fabs(v) > 1.0) schema_fail(at, "must lie in [-1, 1]");
        chi.values.push_back(v);
      }
      return Series::dirichlet_l(chi, name.get<std::string>());
    }
    if (fam == "explicit") {
      const auto& terms = member(doc, "terms", "");
      if (!terms.is_array()) schema_fail("/terms", "expected an array");
      std::vector<Term> list;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto at = "/terms/" + std::to_string(i);
        const auto& t = terms[i];
        if (!t.is_array() || t.size() != 2) schema_fail(at, "expected [lambda, a]");
        const double lambda = number(t[0], at + "/0");
        const double a = number(t[1], at + "/1");
        if (!(lambda > 0.0)) schema_fail(at + "/0", "lambda must be > 0");
        if (!list.empty() && !(lambda > list.back().lambda)) {
          schema_fail(at + "/0", "lambda must be strictly increasing");
        }
        list.push_back({lambda, a});
      }
      if (!has_tail) schema_fail("/tail_bound", "missing (required for explicit series)");
      return Series::from_terms(name.get<std::string>(), std::move(list),
                                parse_tail(doc["tail_bound"]));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Schema) throw;
    fail(ErrorCode::Schema, e.what());
  }
  schema_fail("/family", "unknown family \"" + fam + "\"");
}

Series load_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Schema, "cannot open series file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_series_json(buffer.str());
}

std::string series_to_json(const Series& series) {
  json doc;
  doc["name"] = series.name();
  doc["family"] = family_name(series.family());
  doc["params"] = json::object();
  switch (series.family()) {
    case Family::DedekindQuadratic:
      doc["params"]["discriminant"] = series.discriminant();
      break;
    case Family::DirichletL:
      doc["params"]["modulus"] = series.character().modulus;
      doc["params"]["values"] = series.character().values;
      break;
    case Family::Explicit: {
      json terms = json::array();
      for (const auto& t : series.listed_terms()) terms.push_back({t.lambda, t.a});
      doc["terms"] = terms;
      if (const auto& tb = series.tail_descriptor()) {
        if (tb->type == TailBound::Type::IntegralTest) {
          doc["tail_bound"] = {{"type", "integral_test"},
                               {"params", {{"C", tb->C}, {"kappa", tb->kappa}}}};
        } else {
          doc["tail_bound"] = {
              {"type", "geometric"},
              {"params", {{"C", tb->C}, {"ratio", tb->ratio}, {"sigma_min", tb->sigma_min}}}};
        }
      }
      break;
    }
    default:
      break;
  }
  return doc.dump(2);
}

}  // namespace gds
