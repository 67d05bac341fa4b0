// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file lines.hpp
 * @brief Transition energies between deformed levels, series tables and
 *        splitting-vs-deformation scans.
 *
 * No selection rules are applied: every ordered pair of distinct-energy
 * levels is a line.
 */

#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "qdeform/qnum.hpp"
#include "qdeform/spectrum.hpp"

namespace qdeform {

/// A deformed level, (j, 2|m|).
struct LevelKey {
  SpinLabel j;
  int twice_abs_m = 0;

  auto operator<=>(const LevelKey&) const = default;
};

struct TransitionLine {
  LevelKey upper;
  LevelKey lower;
  double delta_energy_ry = 0.0;
  /// delta_energy_ry converted to the configured output unit.
  double delta_energy = 0.0;
  double wavenumber_per_cm = 0.0;
  double wavelength_nm = 0.0;
};

/// Orders the pair by energy internally. Throws DegenerateTransition if both
/// energies are equal, std::invalid_argument for an invalid key.
TransitionLine transition(LevelKey a, LevelKey b, const DeformationParameter& d,
                          const UnitsConfig& u);

/// Lines from every level with j <= j_max lying strictly above `lower`,
/// ascending by delta energy.
std::vector<TransitionLine> series_table(LevelKey lower, SpinLabel j_max,
                                         const DeformationParameter& d, const UnitsConfig& u);

enum class ScanFlag { ok, non_positive_denominator, out_of_range };

std::string to_string(ScanFlag f);

struct ScanRow {
  double s = 0.0;
  double q = 1.0;
  SpinLabel j;
  int twice_abs_m = 0;
  /// NaN on flagged rows.
  double energy_ry = 0.0;
  double deviation_ry = 0.0;
  ScanFlag flag = ScanFlag::ok;
};

/// E(j, |m|; s) - E_undeformed(j) for every s and every |m| <= j, in input
/// order of s then ascending |m|. Unphysical points are flagged, not thrown.
/// Throws std::invalid_argument for non-finite s.
std::vector<ScanRow> splitting_scan(SpinLabel j, std::span<const double> s_values);

}  // namespace qdeform
