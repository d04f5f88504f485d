// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#include "kronecker.hpp"

#include <cstdlib>
#include <string>

#include "error.hpp"

namespace gds {

namespace {

bool squarefree(long long n) {
  n = std::llabs(n);
  for (long long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

// Jacobi symbol (a/n), n odd positive.
int jacobi(long long a, long long n) {
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

bool is_fundamental_discriminant(long long D) {
  if (D == 0 || D == 1) return false;
  const long long r = mod(D, 4);
  if (r == 1) return squarefree(D);
  if (r != 0) return false;
  const long long m = D / 4;
  const long long rm = mod(m, 4);
  return (rm == 2 || rm == 3) && squarefree(m);
}

int kronecker_symbol(long long D, long long n) {
  require(n >= 1, "kronecker_symbol: n must be >= 1");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (D % 2 == 0) return 0;
    const long long r = mod(D, 8);
    if (r == 3 || r == 5) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(D, n);
}

Character kronecker_character(long long D) {
  if (!is_fundamental_discriminant(D)) {
    fail(ErrorCode::InvalidArgument,
         "kronecker_character: " + std::to_string(D) +
             " is not a fundamental discriminant");
  }
  Character chi;
  chi.modulus = static_cast<int>(std::llabs(D));
  chi.values.assign(static_cast<std::size_t>(chi.modulus), 0.0);
  for (int a = 1; a < chi.modulus; ++a) {
    chi.values[static_cast<std::size_t>(a)] = kronecker_symbol(D, a);
  }
  return chi;
}

}  // namespace gds
