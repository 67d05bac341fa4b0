// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file format.hpp
 * @brief Deterministic tabular output: CSV, JSON and aligned plain text.
 *
 * Floating values are always printed with 15 significant digits ("%.15g"),
 * so identical inputs give byte-identical documents.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qdeform::format {

/// A half-integer held as twice its value; CSV/JSON print the integer,
/// the plain-text table prints "3/2", "-1/2", "2".
struct Spin {
  int twice = 0;
};

using Cell = std::variant<std::monostate, bool, long long, double, std::string, Spin>;

struct Column {
  std::string name;
  /// Header used by the plain-text table; empty means `name`.
  std::string pretty_name;
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

/// "%.15g" with -0 folded to 0.
std::string format_number(double v);
/// v rounded to 15 significant digits (identity on non-finite values).
double round15(double v);
std::string format_spin(int twice);

void write_csv(const Table& t, std::ostream& out);
void write_pretty(const Table& t, std::ostream& out);
/// Array of row objects keyed by column name.
nlohmann::ordered_json rows_json(const Table& t);
/// {"config": config, "rows": [...]}, pretty-printed with a trailing newline.
void write_json(const Table& t, const nlohmann::ordered_json& config, std::ostream& out);

nlohmann::ordered_json number_json(double v);

}  // namespace qdeform::format
