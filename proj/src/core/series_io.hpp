// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "series.hpp"

namespace gds {

/// Parses the series-definition document
///   { "name": str, "family": str, "params": {...},
///     "terms": [[lambda, a], ...],
///     "tail_bound": {"type": "integral_test" | "geometric", "params": {...}} }
/// Syntax errors report line and column; content errors name the offending
/// field as a JSON pointer. Both throw Error(Schema).
Series parse_series_json(const std::string& text);
Series load_series_file(const std::string& path);

/// Inverse of parse_series_json (built-in families omit terms).
std::string series_to_json(const Series& series);

}  // namespace gds
