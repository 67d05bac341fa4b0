// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdeform/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace qdeform::format {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string cell_text(const Cell& c, bool pretty) {
  return std::visit(overloaded{
                        [](std::monostate) { return std::string(); },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                        [](long long v) { return std::to_string(v); },
                        [](double v) { return format_number(v); },
                        [](const std::string& s) { return s; },
                        [pretty](Spin s) {
                          return pretty ? format_spin(s.twice) : std::to_string(s.twice);
                        },
                    },
                    c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

bool right_aligned(const Cell& c) {
  return !std::holds_alternative<std::string>(c) && !std::holds_alternative<std::monostate>(c);
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double round15(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

std::string format_spin(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << csv_escape(t.columns[i].name);
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_escape(cell_text(row[i], false));
    }
    out << '\n';
  }
}

void write_pretty(const Table& t, std::ostream& out) {
  const std::size_t ncol = t.columns.size();
  std::vector<std::string> header(ncol);
  std::vector<std::size_t> width(ncol);
  for (std::size_t i = 0; i < ncol; ++i) {
    const auto& c = t.columns[i];
    header[i] = c.pretty_name.empty() ? c.name : c.pretty_name;
    width[i] = header[i].size();
  }
  std::vector<std::vector<std::string>> text;
  text.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    auto& line = text.emplace_back();
    for (std::size_t i = 0; i < ncol; ++i) {
      line.push_back(cell_text(row[i], true));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto emit = [&](std::size_t i, const std::string& s, bool right) {
    const std::string pad(width[i] - s.size(), ' ');
    out << (i ? "  " : "") << (right ? pad + s : s + pad);
  };
  for (std::size_t i = 0; i < ncol; ++i) emit(i, header[i], false);
  out << '\n';
  for (std::size_t i = 0; i < ncol; ++i) out << (i ? "  " : "") << std::string(width[i], '-');
  out << '\n';
  for (std::size_t r = 0; r < text.size(); ++r) {
    for (std::size_t i = 0; i < ncol; ++i) emit(i, text[r][i], right_aligned(t.rows[r][i]));
    out << '\n';
  }
}

nlohmann::ordered_json number_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round15(v);
}

nlohmann::ordered_json rows_json(const Table& t) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      obj[t.columns[i].name] = std::visit(
          overloaded{
              [](std::monostate) { return nlohmann::ordered_json(nullptr); },
              [](bool b) { return nlohmann::ordered_json(b); },
              [](long long v) { return nlohmann::ordered_json(v); },
              [](double v) { return number_json(v); },
              [](const std::string& s) { return nlohmann::ordered_json(s); },
              [](Spin s) { return nlohmann::ordered_json(s.twice); },
          },
          row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

void write_json(const Table& t, const nlohmann::ordered_json& config, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["config"] = config;
  doc["rows"] = rows_json(t);
  out << doc.dump(2) << '\n';
}

}  // namespace qdeform::format
