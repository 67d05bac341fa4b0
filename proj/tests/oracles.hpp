// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

// Reference values computed independently of the library: q-numbers from
// powers of q in 50-digit arithmetic, state enumeration by filtering every
// (m, p) pair.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using High = boost::multiprecision::cpp_bin_float_50;

/// (q^x - q^-x) / (q - q^-1), or x itself at q = 1.
inline High qnumber(const High& x, const High& q) {
  if (q == 1) return x;
  return (pow(q, x) - pow(q, -x)) / (q - 1 / q);
}

inline double qnumber(double x, double q) { return qnumber(High(x), High(q)).convert_to<double>(); }

/// q given s, in high precision.
inline High q_of_s(double s) { return exp(High(s)); }

/// 8[j][j+1] - 4[m]([m+1]+[m-1]) + 8m^2 + 2 in high precision.
inline High denominator(double j, double m, const High& q) {
  return 8 * qnumber(High(j), q) * qnumber(High(j + 1), q) -
         4 * qnumber(High(m), q) * (qnumber(High(m + 1), q) + qnumber(High(m - 1), q)) +
         8 * High(m) * m + 2;
}

inline double energy(double j, double m, const High& q) {
  return (High(-2) / denominator(j, m, q)).convert_to<double>();
}

/// All (2m, 2p) pairs of the spin-j irrep squared, optionally keeping m^2 = p^2.
inline std::vector<std::pair<int, int>> states(int twice_j, bool constrained) {
  std::vector<std::pair<int, int>> out;
  for (int tm = -twice_j; tm <= twice_j; ++tm) {
    for (int tp = -twice_j; tp <= twice_j; ++tp) {
      if ((twice_j - tm) % 2 != 0 || (twice_j - tp) % 2 != 0) continue;
      if (constrained && tm * tm != tp * tp) continue;
      out.emplace_back(tm, tp);
    }
  }
  return out;
}

/// Least-squares slope of log|dev| against log s.
inline double fitted_order(const std::vector<double>& s, const std::vector<double>& dev) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double x = std::log(s[i]);
    const double y = std::log(std::abs(dev[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace oracle
