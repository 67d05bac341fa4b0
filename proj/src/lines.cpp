// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdeform/lines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qdeform/errors.hpp"

namespace qdeform {

namespace {

std::string key_string(LevelKey k) {
  return "(j=" + k.j.to_string() + ", |m|=" + SpinLabel(k.twice_abs_m).to_string() + ")";
}

TransitionLine make_line(LevelKey upper, double e_upper, LevelKey lower, double e_lower,
                         const UnitsConfig& u) {
  TransitionLine line;
  line.upper = upper;
  line.lower = lower;
  line.delta_energy_ry = e_upper - e_lower;
  line.delta_energy = u.convert(line.delta_energy_ry);
  line.wavenumber_per_cm = line.delta_energy_ry * u.rydberg_per_cm;
  line.wavelength_nm = 1e7 / line.wavenumber_per_cm;
  return line;
}

}  // namespace

TransitionLine transition(LevelKey a, LevelKey b, const DeformationParameter& d,
                          const UnitsConfig& u) {
  u.validate();
  const double ea = energy(a.j, a.twice_abs_m, d);
  const double eb = energy(b.j, b.twice_abs_m, d);
  if (ea == eb) {
    throw DegenerateTransition("levels " + key_string(a) + " and " + key_string(b) +
                               " have equal energy");
  }
  return ea > eb ? make_line(a, ea, b, eb, u) : make_line(b, eb, a, ea, u);
}

std::vector<TransitionLine> series_table(LevelKey lower, SpinLabel j_max,
                                         const DeformationParameter& d, const UnitsConfig& u) {
  u.validate();
  if (j_max < lower.j) {
    throw std::invalid_argument("j_max must be at least the lower level's j");
  }
  const double e_lower = energy(lower.j, lower.twice_abs_m, d);
  std::vector<TransitionLine> out;
  for (const auto& level : level_table(j_max, d, Mode::deformed)) {
    if (level.energy_ry <= e_lower) continue;
    out.push_back(make_line({level.j, *level.twice_abs_m}, level.energy_ry, lower, e_lower, u));
  }
  std::stable_sort(out.begin(), out.end(), [](const TransitionLine& x, const TransitionLine& y) {
    return x.delta_energy_ry < y.delta_energy_ry;
  });
  return out;
}

std::string to_string(ScanFlag f) {
  switch (f) {
    case ScanFlag::ok:
      return "ok";
    case ScanFlag::non_positive_denominator:
      return "non_positive_denominator";
    case ScanFlag::out_of_range:
      return "out_of_range";
  }
  return "?";
}

std::vector<ScanRow> splitting_scan(SpinLabel j, std::span<const double> s_values) {
  for (double s : s_values) {
    if (!std::isfinite(s)) throw std::invalid_argument("scan s values must be finite");
  }
  const double e0 = energy_undeformed(j);
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<ScanRow> out;
  out.reserve(s_values.size() * static_cast<std::size_t>(j.twice_j() / 2 + 1));
  for (double s : s_values) {
    for (int tm = j.twice_j() % 2; tm <= j.twice_j(); tm += 2) {
      ScanRow row{s, std::exp(s), j, tm, nan, nan, ScanFlag::ok};
      try {
        const auto d = DeformationParameter::from_s(s);
        row.energy_ry = energy(j, tm, d);
        row.deviation_ry = row.energy_ry - e0;
      } catch (const NonPositiveDenominator&) {
        row.flag = ScanFlag::non_positive_denominator;
      } catch (const OutOfRange&) {
        row.flag = ScanFlag::out_of_range;
      } catch (const std::invalid_argument&) {
        // q = exp(s) itself not representable
        row.flag = ScanFlag::out_of_range;
      }
      out.push_back(row);
    }
  }
  return out;
}

}  // namespace qdeform
