// Copyright 2026 The gds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>

namespace gds {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays correct
/// when an addend is larger in magnitude than the running sum.
class NeumaierSum {
 public:
  NeumaierSum& operator+=(double value) {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Componentwise compensated sum of complex addends.
class ComplexNeumaierSum {
 public:
  ComplexNeumaierSum& operator+=(std::complex<double> value) {
    re_ += value.real();
    im_ += value.imag();
    return *this;
  }

  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  NeumaierSum re_;
  NeumaierSum im_;
};

}  // namespace gds
