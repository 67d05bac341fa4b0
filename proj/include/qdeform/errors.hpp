// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qdeform {

/// Base class for computational failures (as opposed to invalid input,
/// which is reported with std::invalid_argument).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A q-number argument |s*x| too large for double precision.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// The energy denominator evaluated to a non-positive (or non-finite) value.
class NonPositiveDenominator : public Error {
 public:
  NonPositiveDenominator(int twice_j, int twice_m, double value);

  int twice_j() const noexcept { return twice_j_; }
  int twice_m() const noexcept { return twice_m_; }
  double value() const noexcept { return value_; }

 private:
  int twice_j_;
  int twice_m_;
  double value_;
};

/// Two levels of identical energy were passed to transition().
class DegenerateTransition : public Error {
 public:
  using Error::Error;
};

}  // namespace qdeform
