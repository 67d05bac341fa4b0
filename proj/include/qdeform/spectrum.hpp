// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spectrum.hpp
 * @brief Constrained coupled states |j,m,j,p> and the deformed bound-state energies.
 *
 * Energies are in Rydberg units: E/Ry = -2/D with
 *   D = 8[j][j+1] - 4[m]([m+1] + [m-1]) + 8m^2 + 2,
 * which reduces to -1/(2j+1)^2 at q = 1. D depends on m only through |m|,
 * so levels are keyed by (j, |m|) and never by comparing floating energies.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdeform/qnum.hpp"

namespace qdeform {

enum class Mode { deformed, undeformed };

enum class EnergyUnit { rydberg, ev, wavenumber_per_cm };

struct UnitsConfig {
  double rydberg_ev = 13.605693122994;
  /// Rydberg constant in cm^-1 (infinite nuclear mass by default).
  double rydberg_per_cm = 109737.31568;
  EnergyUnit output_unit = EnergyUnit::rydberg;

  /// Throws std::invalid_argument on non-positive constants.
  void validate() const;
  double convert(double energy_ry) const;
};

std::string to_string(EnergyUnit u);
std::string to_string(Mode m);

/// A state of the two deformed su(2) copies with i = j built in.
struct QuantumState {
  SpinLabel j;
  int twice_m = 0;
  int twice_p = 0;

  bool operator==(const QuantumState&) const = default;
};

struct EnergyLevel {
  SpinLabel j;
  /// 2|m|; empty for undeformed levels, which are keyed by j alone.
  std::optional<int> twice_abs_m;
  double energy_ry = 0.0;
  int multiplicity = 0;
  /// n = 2j+1
  int principal_n = 0;
};

struct DegeneracySummary {
  int levels = 0;
  int states = 0;

  bool operator==(const DegeneracySummary&) const = default;
};

/// Throws std::invalid_argument unless |twice_m| <= twice_j with matching parity.
void check_projection(SpinLabel j, int twice_m);

double denominator(SpinLabel j, int twice_m, const DeformationParameter& d);

/// -2/D, throwing NonPositiveDenominator when D is not a positive finite number.
double energy_from_denominator(double denom, SpinLabel j, int twice_m);

double energy(SpinLabel j, int twice_m, const DeformationParameter& d);

/// -1/(2j+1)^2
double energy_undeformed(SpinLabel j);

/// Ordered by descending m, then descending p. Deformed mode keeps p = +-m only.
std::vector<QuantumState> enumerate_states(SpinLabel j, Mode mode);

/// All levels with j <= j_max, ascending by (energy, j, |m|).
std::vector<EnergyLevel> level_table(SpinLabel j_max, const DeformationParameter& d, Mode mode);

/// Distinct |m| values and deformed state count for one j.
DegeneracySummary degeneracy_summary(SpinLabel j);

}  // namespace qdeform
