// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdeform/qnum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qdeform/errors.hpp"

namespace qdeform {

namespace {

// Past this, sinh() itself overflows (ln(DBL_MAX) ~ 709.78).
constexpr double kSinhArgLimit = 700.0;

// The series branch is only used while |s x| stays small as well; the s^6
// remainder is then below double rounding for |x| <= 50 at the default threshold.
constexpr double kSeriesArgFactor = 50.0;

void check_threshold(double threshold) {
  if (!(threshold > 0.0) || !std::isfinite(threshold)) {
    throw std::invalid_argument("small_s_threshold must be positive and finite");
  }
}

}  // namespace

DeformationParameter DeformationParameter::from_q(double q, double small_s_threshold) {
  if (!std::isfinite(q) || !(q > 0.0)) {
    throw std::invalid_argument("deformation q must be a positive finite real, got " +
                                std::to_string(q));
  }
  check_threshold(small_s_threshold);
  return {q, std::log(q), small_s_threshold};
}

DeformationParameter DeformationParameter::from_s(double s, double small_s_threshold) {
  if (!std::isfinite(s)) {
    throw std::invalid_argument("deformation s must be finite");
  }
  check_threshold(small_s_threshold);
  const double q = std::exp(s);
  if (!std::isfinite(q) || !(q > 0.0)) {
    throw std::invalid_argument("deformation s = " + std::to_string(s) +
                                " gives q outside double range");
  }
  return {q, s, small_s_threshold};
}

DeformationParameter DeformationParameter::inverse() const {
  return {1.0 / q_, -s_, small_s_threshold_};
}

SpinLabel::SpinLabel(int twice_j) : twice_j_(twice_j) {
  if (twice_j < 0) {
    throw std::invalid_argument("twice_j must be non-negative, got " + std::to_string(twice_j));
  }
}

std::string SpinLabel::to_string() const {
  if (is_integer_spin()) return std::to_string(twice_j_ / 2);
  return std::to_string(twice_j_) + "/2";
}

double qnumber(double x, const DeformationParameter& d) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("qnumber argument must be finite");
  }
  const double s = std::abs(d.s());
  if (s == 0.0) return x;

  const double ax = std::abs(x);
  const double sx = s * ax;
  double r;
  if (s < d.small_s_threshold() && sx < kSeriesArgFactor * d.small_s_threshold()) {
    const double s2 = s * s;
    const double x2 = ax * ax;
    const double c2 = ax * (x2 - 1.0) / 6.0;
    const double c4 = ax * (x2 - 1.0) * (3.0 * x2 - 7.0) / 360.0;
    r = ax + s2 * (c2 + s2 * c4);
  } else if (s < kSinhArgLimit && sx < kSinhArgLimit) {
    r = std::sinh(sx) / std::sinh(s);
  } else {
    // e^{s(|x|-1)} (1 - e^{-2s|x|}) / (1 - e^{-2s})
    r = std::exp(s * (ax - 1.0)) * (-std::expm1(-2.0 * sx)) / (-std::expm1(-2.0 * s));
  }
  if (!std::isfinite(r)) {
    throw OutOfRange("q-number [" + std::to_string(x) + "] at s = " + std::to_string(d.s()) +
                     " exceeds double range");
  }
  return x < 0.0 ? -r : r;
}

double qnumber_half(int twice_x, const DeformationParameter& d) {
  return qnumber(0.5 * twice_x, d);
}

std::vector<double> qnumber_series_coeffs(double x, int order) {
  if (order < 0 || order > 4) {
    throw std::invalid_argument("qnumber_series_coeffs supports order 0..4, got " +
                                std::to_string(order));
  }
  const double x2 = x * x;
  std::vector<double> c{x};
  if (order >= 2) c.push_back(x * (x2 - 1.0) / 6.0);
  if (order >= 4) c.push_back(x * (x2 - 1.0) * (3.0 * x2 - 7.0) / 360.0);
  return c;
}

}  // namespace qdeform
