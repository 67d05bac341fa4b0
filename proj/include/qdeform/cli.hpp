// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdeform/spectrum.hpp"

namespace qdeform::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitComputation = 2;

enum class Command { levels, states, lines, scan, verify, dump_irrep };
enum class OutputFormat { csv, json, table };

struct CliConfig {
  Command command = Command::levels;
  /// At most one of q / s; neither means q = 1.
  std::optional<double> q;
  std::optional<double> s;
  /// levels, lines, verify. Default 8 (j = 4).
  int twice_j_max = 8;
  /// states, scan, dump-irrep.
  std::optional<int> twice_j;
  Mode mode = Mode::deformed;
  UnitsConfig units;
  /// Empty selects the per-command default (json for dump-irrep, csv otherwise).
  std::optional<OutputFormat> format;
  double tolerance = 1e-11;
  std::optional<std::string> output_path;
  /// Lower level for `lines`.
  int lower_twice_j = 0;
  int lower_twice_abs_m = 0;
  /// `scan` abscissae.
  std::vector<double> s_values;
};

std::string to_string(Command c);
std::string to_string(OutputFormat f);

/// Parses argv-style arguments (without the program name). Throws
/// std::invalid_argument on malformed input. Returns nullopt when help was
/// requested, after printing it to `out`.
std::optional<CliConfig> parse(const std::vector<std::string>& args, std::ostream& out);

/// Executes a parsed config, writing the document to `out` and diagnostics
/// to `err`. Returns an exit status (kExitOk, kExitValidation, kExitComputation).
/// output_path is ignored here; see main().
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse + run, honoring output_path.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdeform::cli
