// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file qnum.hpp
 * @brief q-numbers [x] = (q^x - q^-x)/(q - q^-1) = sinh(s x)/sinh(s), s = ln q.
 *
 * Everything downstream (ladder coefficients, Casimir eigenvalues, level
 * energies) is built from these. Evaluation is branch-selected:
 *   - s == 0 returns x exactly,
 *   - |s| below the small-s threshold uses the even series in s,
 *   - moderate arguments use the sinh ratio,
 *   - large |s x| uses an exponential form, throwing OutOfRange once the
 *     result leaves double range.
 * The sign of x and of s is factored out first, so [-x] = -[x] and
 * [x]_q = [x]_{1/q} hold bit-exactly for a given |s|.
 */

#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qdeform {

/// Real deformation parameter q > 0, stored together with s = ln q.
class DeformationParameter {
 public:
  static constexpr double kDefaultSmallSThreshold = 1e-4;

  /// Undeformed, q = 1.
  DeformationParameter() = default;

  /// Throws std::invalid_argument unless q is finite and positive.
  static DeformationParameter from_q(double q, double small_s_threshold = kDefaultSmallSThreshold);
  /// Throws std::invalid_argument unless s is finite and exp(s) is a positive finite double.
  static DeformationParameter from_s(double s, double small_s_threshold = kDefaultSmallSThreshold);

  double q() const noexcept { return q_; }
  double s() const noexcept { return s_; }
  double small_s_threshold() const noexcept { return small_s_threshold_; }
  bool is_undeformed() const noexcept { return s_ == 0.0; }

  /// The parameter 1/q (s -> -s), same threshold.
  DeformationParameter inverse() const;

 private:
  DeformationParameter(double q, double s, double threshold) noexcept
      : q_(q), s_(s), small_s_threshold_(threshold) {}

  double q_ = 1.0;
  double s_ = 0.0;
  double small_s_threshold_ = kDefaultSmallSThreshold;
};

/// Non-negative half-integer spin j, held exactly as 2j.
class SpinLabel {
 public:
  constexpr SpinLabel() = default;
  /// Throws std::invalid_argument if twice_j < 0.
  explicit SpinLabel(int twice_j);

  constexpr int twice_j() const noexcept { return twice_j_; }
  constexpr double value() const noexcept { return 0.5 * twice_j_; }
  constexpr bool is_integer_spin() const noexcept { return twice_j_ % 2 == 0; }
  /// Irrep dimension 2j+1.
  constexpr int dim() const noexcept { return twice_j_ + 1; }

  /// "0", "1", "3/2", ...
  std::string to_string() const;

  constexpr auto operator<=>(const SpinLabel&) const = default;

 private:
  int twice_j_ = 0;
};

/// [x] for real x. Throws OutOfRange if the value does not fit in a double,
/// std::invalid_argument for non-finite x.
double qnumber(double x, const DeformationParameter& d);

/// [n/2], the half-integer entry point.
double qnumber_half(int twice_x, const DeformationParameter& d);

/// Coefficients {c0, c2, c4} (truncated to `order`) of [x] = c0 + c2 s^2 + c4 s^4 + ...
/// Supported orders: 0..4. Odd orders add nothing. Throws std::invalid_argument otherwise.
std::vector<double> qnumber_series_coeffs(double x, int order);

}  // namespace qdeform
