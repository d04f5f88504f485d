// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0
//
// Kronecker symbol by factoring n and using Euler's criterion at odd primes.

#pragma once

namespace oracle {

inline long long powmod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = static_cast<long long>((__int128)r * b % m);
    b = static_cast<long long>((__int128)b * b % m);
    e >>= 1;
  }
  return r;
}

inline int legendre(long long a, long long p) {
  const long long r = powmod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

// (D/2) for D = 0, 1 mod 4.
inline int kronecker_two(long long D) {
  if (D % 2 == 0) return 0;
  const long long m = ((D % 8) + 8) % 8;
  return (m == 1 || m == 7) ? 1 : -1;
}

inline int kronecker(long long D, long long n) {
  int r = 1;
  for (long long p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      r *= p == 2 ? kronecker_two(D) : legendre(D, p);
      n /= p;
    }
  }
  if (n > 1) r *= n == 2 ? kronecker_two(D) : legendre(D, n);
  return r;
}

}  // namespace oracle
