// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace gds {

enum class ErrorCode {
  InvalidArgument,
  Pole,
  UnsupportedRegion,
  Schema,
  NotConverged,
  NonIntegerDegree,
  Internal,
};

/// Every failure raised by the core carries one of the codes above; the C API
/// maps them one-to-one onto gds_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by invariants_from_fe; carries the offending raw degree 2*sum(alpha).
class NonIntegerDegreeError : public Error {
 public:
  NonIntegerDegreeError(double raw, const std::string& what)
      : Error(ErrorCode::NonIntegerDegree, what), raw_degree_(raw) {}
  double raw_degree() const noexcept { return raw_degree_; }

 private:
  double raw_degree_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::InvalidArgument, what);
}

}  // namespace gds
