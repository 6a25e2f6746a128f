#pragma once

#include <string>

namespace hunter {

enum class OutputFormat { Csv, Json };

/// Run configuration shared by the CLI commands. Zero-valued geometry fields
/// (ymin, ymax, delta) select gamma-dependent defaults downstream.
struct RunConfig {
  double gamma = 1.1;
  double eps = 0.0;
  double tol = 1e-10;
  double sonic_tol = 1e-11;
  int order = 10;
  double delta = 0.0;
  double ymin = 0.0;
  double ymax = 0.0;
  double scan_lo = 1e-6;
  double scan_hi = 0.5;
  int grid_per_decade = 40;
  double laneemden_ymax = 1e13;
  std::string out;
  OutputFormat format = OutputFormat::Csv;

  /// Throws Config if any field is outside its documented range.
  void validate() const;
  /// Flat key=value form; round-trips losslessly through parse_config.
  std::string serialize() const;
};

/// Parses the flat key=value format (one pair per line, '#' comments).
/// Unknown keys and malformed lines throw Config.
RunConfig parse_config(const std::string& text);

/// Reads and parses a config file. Throws Config on I/O failure.
RunConfig load_config(const std::string& path);

}  // namespace hunter
