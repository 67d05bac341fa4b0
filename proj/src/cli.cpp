// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdeform/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qdeform/errors.hpp"
#include "qdeform/format.hpp"
#include "qdeform/lines.hpp"
#include "qdeform/repr.hpp"

namespace qdeform::cli {

namespace {

using format::Cell;
using format::Spin;
using format::Table;
using Json = nlohmann::ordered_json;

// Upper bound on any twice-j flag; irreps are dense, so this caps memory.
constexpr int kMaxTwiceJ = 1000;

int parse_twice(const std::string& text, const std::string& flag) {
  const bool digits = !text.empty() && text.size() <= 6 &&
                      std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!digits) {
    throw std::invalid_argument(flag + " expects twice-j as a non-negative integer literal, got '" +
                                text + "'");
  }
  const int v = std::stoi(text);
  if (v > kMaxTwiceJ) {
    throw std::invalid_argument(flag + " = " + text + " exceeds the supported maximum " +
                                std::to_string(kMaxTwiceJ));
  }
  return v;
}

DeformationParameter deformation_of(const CliConfig& c) {
  if (c.q && c.s) throw std::invalid_argument("--q and --s are mutually exclusive");
  if (c.s) return DeformationParameter::from_s(*c.s);
  return DeformationParameter::from_q(c.q.value_or(1.0));
}

OutputFormat format_of(const CliConfig& c) {
  return c.format.value_or(c.command == Command::dump_irrep ? OutputFormat::json
                                                            : OutputFormat::csv);
}

SpinLabel required_j(const CliConfig& c) {
  if (!c.twice_j) throw std::invalid_argument(to_string(c.command) + " requires --j");
  return SpinLabel(*c.twice_j);
}

Cell num(double v) { return v; }
Cell integer(long long v) { return v; }

Json base_config(const CliConfig& c, const DeformationParameter& d) {
  Json j;
  j["command"] = to_string(c.command);
  j["q"] = format::number_json(d.q());
  j["s"] = format::number_json(d.s());
  return j;
}

void emit(const Table& t, const Json& config, OutputFormat f, std::ostream& out) {
  switch (f) {
    case OutputFormat::csv:
      format::write_csv(t, out);
      break;
    case OutputFormat::json:
      format::write_json(t, config, out);
      break;
    case OutputFormat::table:
      format::write_pretty(t, out);
      break;
  }
}

int run_levels(const CliConfig& c, std::ostream& out) {
  const auto d = deformation_of(c);
  const SpinLabel j_max(c.twice_j_max);
  Table t{{{"twice_j", "j"},
           {"twice_abs_m", "|m|"},
           {"n", ""},
           {"energy", ""},
           {"unit", ""},
           {"multiplicity", ""}},
          {}};
  for (const auto& level : level_table(j_max, d, c.mode)) {
    t.rows.push_back({Spin{level.j.twice_j()},
                      level.twice_abs_m ? Cell(Spin{*level.twice_abs_m}) : Cell(std::monostate{}),
                      integer(level.principal_n), num(c.units.convert(level.energy_ry)),
                      to_string(c.units.output_unit), integer(level.multiplicity)});
  }
  Json config = base_config(c, d);
  config["twice_j_max"] = c.twice_j_max;
  config["mode"] = to_string(c.mode);
  config["units"] = to_string(c.units.output_unit);
  emit(t, config, format_of(c), out);
  return kExitOk;
}

int run_states(const CliConfig& c, std::ostream& out) {
  const SpinLabel j = required_j(c);
  Table t{{{"twice_j", "j"}, {"twice_m", "m"}, {"twice_p", "p"}}, {}};
  for (const auto& st : enumerate_states(j, c.mode)) {
    t.rows.push_back({Spin{st.j.twice_j()}, Spin{st.twice_m}, Spin{st.twice_p}});
  }
  Json config;
  config["command"] = to_string(c.command);
  config["twice_j"] = j.twice_j();
  config["mode"] = to_string(c.mode);
  emit(t, config, format_of(c), out);
  return kExitOk;
}

int run_lines(const CliConfig& c, std::ostream& out) {
  const auto d = deformation_of(c);
  const LevelKey lower{SpinLabel(c.lower_twice_j), c.lower_twice_abs_m};
  check_projection(lower.j, lower.twice_abs_m);
  if (lower.twice_abs_m < 0) throw std::invalid_argument("--lower-m is 2|m| and must be >= 0");
  Table t{{{"upper_twice_j", "upper j"},
           {"upper_twice_abs_m", "upper |m|"},
           {"lower_twice_j", "lower j"},
           {"lower_twice_abs_m", "lower |m|"},
           {"delta_energy", ""},
           {"unit", ""},
           {"wavenumber_per_cm", ""},
           {"wavelength_nm", ""}},
          {}};
  for (const auto& line : series_table(lower, SpinLabel(c.twice_j_max), d, c.units)) {
    t.rows.push_back({Spin{line.upper.j.twice_j()}, Spin{line.upper.twice_abs_m},
                      Spin{line.lower.j.twice_j()}, Spin{line.lower.twice_abs_m},
                      num(line.delta_energy), to_string(c.units.output_unit),
                      num(line.wavenumber_per_cm), num(line.wavelength_nm)});
  }
  Json config = base_config(c, d);
  config["twice_j_max"] = c.twice_j_max;
  config["lower_twice_j"] = lower.j.twice_j();
  config["lower_twice_abs_m"] = lower.twice_abs_m;
  config["units"] = to_string(c.units.output_unit);
  emit(t, config, format_of(c), out);
  return kExitOk;
}

int run_scan(const CliConfig& c, std::ostream& out) {
  const SpinLabel j = required_j(c);
  if (c.s_values.empty()) throw std::invalid_argument("scan requires --s-values or --s-range");
  Table t{{{"s", ""},
           {"q", ""},
           {"twice_j", "j"},
           {"twice_abs_m", "|m|"},
           {"energy_ry", ""},
           {"deviation_ry", ""},
           {"flag", ""}},
          {}};
  for (const auto& row : splitting_scan(j, c.s_values)) {
    t.rows.push_back({num(row.s), num(row.q), Spin{row.j.twice_j()}, Spin{row.twice_abs_m},
                      num(row.energy_ry), num(row.deviation_ry), to_string(row.flag)});
  }
  Json config;
  config["command"] = to_string(c.command);
  config["twice_j"] = j.twice_j();
  Json svals = Json::array();
  for (double s : c.s_values) svals.push_back(format::number_json(s));
  config["s_values"] = svals;
  emit(t, config, format_of(c), out);
  return kExitOk;
}

int run_verify(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const auto d = deformation_of(c);
  if (!(c.tolerance > 0.0)) throw std::invalid_argument("--tolerance must be positive");
  Table t{{{"group", ""},
           {"relation", ""},
           {"twice_j", "j"},
           {"twice_j2", "j2"},
           {"q", ""},
           {"max_abs_deviation", ""},
           {"tolerance", ""},
           {"passed", ""}},
          {}};
  int failed = 0;
  auto add = [&](const std::string& group, const VerificationReport& rep, int tj,
                 std::optional<int> tj2, double q) {
    if (!rep.passed) ++failed;
    t.rows.push_back({group, rep.relation_name, Spin{tj},
                      tj2 ? Cell(Spin{*tj2}) : Cell(std::monostate{}), num(q),
                      num(rep.max_abs_deviation), num(rep.tolerance), rep.passed});
  };
  for (int tj = 0; tj <= c.twice_j_max; ++tj) {
    const auto irrep = build_irrep(SpinLabel(tj), d);
    for (const auto& rep : verify_commutators(irrep, c.tolerance)) add("commutator", rep, tj, {}, d.q());
    for (const auto& rep : verify_casimir(irrep, c.tolerance)) add("casimir", rep, tj, {}, d.q());
  }
  const int so4_max = std::min(c.twice_j_max, 2);
  for (int a = 0; a <= so4_max; ++a) {
    for (int b = 0; b <= so4_max; ++b) {
      for (const auto& rep : verify_so4_limit(SpinLabel(a), SpinLabel(b), c.tolerance)) {
        add("so4", rep, a, b, 1.0);
      }
    }
  }
  Json config = base_config(c, d);
  config["twice_j_max"] = c.twice_j_max;
  config["tolerance"] = format::number_json(c.tolerance);
  emit(t, config, format_of(c), out);
  err << "verify: " << (t.rows.size() - failed) << "/" << t.rows.size() << " relations passed\n";
  return failed == 0 ? kExitOk : kExitComputation;
}

Json matrix_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row.push_back(Json::array({format::number_json(m(i, k).real()),
                                 format::number_json(m(i, k).imag())}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_dump_irrep(const CliConfig& c, std::ostream& out) {
  const auto d = deformation_of(c);
  const SpinLabel j = required_j(c);
  if (format_of(c) != OutputFormat::json) {
    throw std::invalid_argument("dump-irrep only supports --format json");
  }
  const auto r = build_irrep(j, d);
  Json rows = Json::array();
  const std::pair<const char*, const ComplexMatrix*> ops[] = {
      {"iz", &r.iz()}, {"iplus", &r.iplus()}, {"iminus", &r.iminus()}};
  for (const auto& [name, mat] : ops) {
    Json o;
    o["j_times_2"] = j.twice_j();
    o["q"] = format::number_json(d.q());
    o["operator"] = name;
    o["dim"] = r.dim();
    o["entries"] = matrix_json(*mat);
    rows.push_back(std::move(o));
  }
  Json doc;
  doc["config"] = base_config(c, d);
  doc["config"]["twice_j"] = j.twice_j();
  doc["rows"] = std::move(rows);
  out << doc.dump() << '\n';
  return kExitOk;
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::levels:
      return "levels";
    case Command::states:
      return "states";
    case Command::lines:
      return "lines";
    case Command::scan:
      return "scan";
    case Command::verify:
      return "verify";
    case Command::dump_irrep:
      return "dump-irrep";
  }
  return "?";
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::json:
      return "json";
    case OutputFormat::table:
      return "table";
  }
  return "?";
}

std::optional<CliConfig> parse(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"q-deformed hydrogen spectrum from su_q(2) + su_q(2)", "qhydro"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::optional<std::string> j_text;
  std::optional<std::string> j_max_text;
  std::optional<std::string> lower_j_text;
  std::optional<std::string> lower_m_text;
  std::optional<OutputFormat> fmt;
  std::vector<double> s_range;

  const std::map<std::string, Mode> modes{{"deformed", Mode::deformed},
                                          {"undeformed", Mode::undeformed}};
  const std::map<std::string, EnergyUnit> units{{"rydberg", EnergyUnit::rydberg},
                                                {"ev", EnergyUnit::ev},
                                                {"wavenumber", EnergyUnit::wavenumber_per_cm}};
  const std::map<std::string, OutputFormat> formats{
      {"csv", OutputFormat::csv}, {"json", OutputFormat::json}, {"table", OutputFormat::table}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "csv, json or table")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("-o,--output", cfg.output_path, "write to file instead of stdout");
  };
  auto add_deformation = [&](CLI::App* sub) {
    auto* q = sub->add_option("--q", cfg.q, "deformation parameter q > 0 (default 1)");
    auto* s = sub->add_option("--s", cfg.s, "deformation as s = ln q");
    q->excludes(s);
  };
  auto add_units = [&](CLI::App* sub) {
    sub->add_option("--units", cfg.units.output_unit, "rydberg, ev or wavenumber")
        ->transform(CLI::CheckedTransformer(units, CLI::ignore_case));
    sub->add_option("--rydberg-ev", cfg.units.rydberg_ev, "1 Ry in eV");
    sub->add_option("--rydberg-wavenumber", cfg.units.rydberg_per_cm, "1 Ry in cm^-1");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "deformed or undeformed")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  };
  auto add_j_max = [&](CLI::App* sub) {
    sub->add_option("--j-max", j_max_text, "largest 2j (default 8, i.e. j = 4)");
  };
  auto add_j = [&](CLI::App* sub) { sub->add_option("--j", j_text, "2j")->required(); };

  auto* levels = app.add_subcommand("levels", "energy level table");
  add_deformation(levels);
  add_j_max(levels);
  add_mode(levels);
  add_units(levels);
  add_common(levels);

  auto* states = app.add_subcommand("states", "enumerate constrained states for one j");
  add_j(states);
  add_mode(states);
  add_common(states);

  auto* lines = app.add_subcommand("lines", "transition series down to one level");
  add_deformation(lines);
  add_j_max(lines);
  add_units(lines);
  lines->add_option("--lower-j", lower_j_text, "2j of the lower level (default 0)");
  lines->add_option("--lower-m", lower_m_text, "2|m| of the lower level (default 0)");
  add_common(lines);

  auto* scan = app.add_subcommand("scan", "level splitting versus s = ln q");
  add_j(scan);
  auto* svals = scan->add_option("--s-values", cfg.s_values, "comma-separated s values")
                    ->delimiter(',');
  auto* srange = scan->add_option("--s-range", s_range, "MIN MAX COUNT, evenly spaced")
                     ->expected(3);
  svals->excludes(srange);
  add_common(scan);

  auto* verify = app.add_subcommand("verify", "check the algebra on explicit irreps");
  add_deformation(verify);
  add_j_max(verify);
  verify->add_option("--tolerance", cfg.tolerance, "relative tolerance (default 1e-11)");
  add_common(verify);

  auto* dump = app.add_subcommand("dump-irrep", "dump I_z, I_+, I_- as JSON");
  add_deformation(dump);
  add_j(dump);
  add_common(dump);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }

  const CLI::App* chosen = app.get_subcommands().front();
  if (chosen == levels) cfg.command = Command::levels;
  if (chosen == states) cfg.command = Command::states;
  if (chosen == lines) cfg.command = Command::lines;
  if (chosen == scan) cfg.command = Command::scan;
  if (chosen == verify) cfg.command = Command::verify;
  if (chosen == dump) cfg.command = Command::dump_irrep;

  cfg.format = fmt;
  if (j_text) cfg.twice_j = parse_twice(*j_text, "--j");
  if (j_max_text) cfg.twice_j_max = parse_twice(*j_max_text, "--j-max");
  if (lower_j_text) cfg.lower_twice_j = parse_twice(*lower_j_text, "--lower-j");
  if (lower_m_text) cfg.lower_twice_abs_m = parse_twice(*lower_m_text, "--lower-m");
  if (!s_range.empty()) {
    const double count = s_range[2];
    if (!(count >= 1.0) || count != static_cast<int>(count) || count > 1e6) {
      throw std::invalid_argument("--s-range COUNT must be a positive integer");
    }
    const int n = static_cast<int>(count);
    for (int i = 0; i < n; ++i) {
      cfg.s_values.push_back(n == 1 ? s_range[0]
                                    : s_range[0] + (s_range[1] - s_range[0]) * i / (n - 1));
    }
  }
  return cfg;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream doc;
  int status = kExitOk;
  try {
    config.units.validate();
    switch (config.command) {
      case Command::levels:
        status = run_levels(config, doc);
        break;
      case Command::states:
        status = run_states(config, doc);
        break;
      case Command::lines:
        status = run_lines(config, doc);
        break;
      case Command::scan:
        status = run_scan(config, doc);
        break;
      case Command::verify:
        status = run_verify(config, doc, err);
        break;
      case Command::dump_irrep:
        status = run_dump_irrep(config, doc);
        break;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  out << doc.str();
  return status;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<CliConfig> config;
  try {
    config = parse(args, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  if (!config) return kExitOk;
  if (!config->output_path) return run(*config, out, err);

  std::ostringstream doc;
  const int status = run(*config, doc, err);
  std::ofstream file(*config->output_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << *config->output_path << " for writing\n";
    return kExitValidation;
  }
  file << doc.str();
  return status;
}

}  // namespace qdeform::cli
