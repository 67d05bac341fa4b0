// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdeform/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <tuple>

#include "qdeform/errors.hpp"

namespace qdeform {

NonPositiveDenominator::NonPositiveDenominator(int twice_j, int twice_m, double value)
    : Error("non-positive energy denominator " + std::to_string(value) + " at (2j, 2m) = (" +
            std::to_string(twice_j) + ", " + std::to_string(twice_m) + ")"),
      twice_j_(twice_j),
      twice_m_(twice_m),
      value_(value) {}

void UnitsConfig::validate() const {
  if (!(rydberg_ev > 0.0) || !std::isfinite(rydberg_ev)) {
    throw std::invalid_argument("rydberg_ev must be positive");
  }
  if (!(rydberg_per_cm > 0.0) || !std::isfinite(rydberg_per_cm)) {
    throw std::invalid_argument("rydberg_per_cm must be positive");
  }
}

double UnitsConfig::convert(double energy_ry) const {
  switch (output_unit) {
    case EnergyUnit::rydberg:
      return energy_ry;
    case EnergyUnit::ev:
      return energy_ry * rydberg_ev;
    case EnergyUnit::wavenumber_per_cm:
      return energy_ry * rydberg_per_cm;
  }
  return energy_ry;
}

std::string to_string(EnergyUnit u) {
  switch (u) {
    case EnergyUnit::rydberg:
      return "rydberg";
    case EnergyUnit::ev:
      return "ev";
    case EnergyUnit::wavenumber_per_cm:
      return "wavenumber_per_cm";
  }
  return "?";
}

std::string to_string(Mode m) { return m == Mode::deformed ? "deformed" : "undeformed"; }

void check_projection(SpinLabel j, int twice_m) {
  if (std::abs(twice_m) > j.twice_j() || (j.twice_j() - twice_m) % 2 != 0) {
    throw std::invalid_argument("twice_m = " + std::to_string(twice_m) +
                                " is not a valid projection for twice_j = " +
                                std::to_string(j.twice_j()));
  }
}

double denominator(SpinLabel j, int twice_m, const DeformationParameter& d) {
  check_projection(j, twice_m);
  const int tj = j.twice_j();
  const int tm = std::abs(twice_m);
  const double m = 0.5 * tm;
  const double jj = qnumber_half(tj, d) * qnumber_half(tj + 2, d);
  const double mm = qnumber_half(tm, d) * (qnumber_half(tm + 2, d) + qnumber_half(tm - 2, d));
  return 8.0 * jj - 4.0 * mm + 8.0 * m * m + 2.0;
}

double energy_from_denominator(double denom, SpinLabel j, int twice_m) {
  if (!(denom > 0.0) || !std::isfinite(denom)) {
    throw NonPositiveDenominator(j.twice_j(), twice_m, denom);
  }
  return -2.0 / denom;
}

double energy(SpinLabel j, int twice_m, const DeformationParameter& d) {
  return energy_from_denominator(denominator(j, twice_m, d), j, twice_m);
}

double energy_undeformed(SpinLabel j) {
  const double n = j.dim();
  return -1.0 / (n * n);
}

std::vector<QuantumState> enumerate_states(SpinLabel j, Mode mode) {
  const int tj = j.twice_j();
  std::vector<QuantumState> out;
  for (int tm = tj; tm >= -tj; tm -= 2) {
    if (mode == Mode::undeformed) {
      for (int tp = tj; tp >= -tj; tp -= 2) out.push_back({j, tm, tp});
    } else if (tm == 0) {
      out.push_back({j, 0, 0});
    } else {
      out.push_back({j, tm, std::abs(tm)});
      out.push_back({j, tm, -std::abs(tm)});
    }
  }
  return out;
}

std::vector<EnergyLevel> level_table(SpinLabel j_max, const DeformationParameter& d, Mode mode) {
  std::vector<EnergyLevel> out;
  for (int tj = 0; tj <= j_max.twice_j(); ++tj) {
    const SpinLabel j(tj);
    if (mode == Mode::undeformed) {
      out.push_back({j, std::nullopt, energy_undeformed(j), j.dim() * j.dim(), j.dim()});
      continue;
    }
    for (int tm = tj % 2; tm <= tj; tm += 2) {
      out.push_back({j, tm, energy(j, tm, d), tm == 0 ? 1 : 4, j.dim()});
    }
  }
  std::sort(out.begin(), out.end(), [](const EnergyLevel& a, const EnergyLevel& b) {
    return std::tuple(a.energy_ry, a.j, a.twice_abs_m.value_or(0)) <
           std::tuple(b.energy_ry, b.j, b.twice_abs_m.value_or(0));
  });
  return out;
}

DegeneracySummary degeneracy_summary(SpinLabel j) {
  const auto states = enumerate_states(j, Mode::deformed);
  std::set<int> abs_m;
  for (const auto& st : states) abs_m.insert(std::abs(st.twice_m));
  return {static_cast<int>(abs_m.size()), static_cast<int>(states.size())};
}

}  // namespace qdeform
