// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hurwitz.hpp"

namespace gds {

/// True for D = 1 mod 4 squarefree, or D = 4m with m = 2, 3 mod 4 squarefree.
/// D = 1 is excluded.
bool is_fundamental_discriminant(long long D);

/// Kronecker symbol (D/n) for n >= 1.
int kronecker_symbol(long long D, long long n);

/// chi_D as a table mod |D|. Throws InvalidArgument unless D is fundamental.
Character kronecker_character(long long D);

}  // namespace gds
