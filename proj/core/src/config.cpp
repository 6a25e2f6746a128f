#include "hunter/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hunter/errors.hpp"

namespace hunter {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("invalid numeric value for " + key + ": " + v);
  }
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("invalid integer value for " + key + ": " + v);
  }
}

}  // namespace

void RunConfig::validate() const {
  if (!(gamma > 1.0 && gamma < 1.2)) {
    throw ConfigError("gamma must lie in (1, 6/5)");
  }
  if (!(tol > 0.0 && tol <= 1e-2)) throw ConfigError("tol out of range");
  if (!(sonic_tol >= 0.0)) throw ConfigError("sonic_tol must be >= 0");
  if (order < 2 || order > 60) throw ConfigError("order must be in [2, 60]");
  if (delta < 0.0 || ymin < 0.0 || ymax < 0.0) {
    throw ConfigError("geometry fields must be >= 0");
  }
  if (ymin > 0.0 && ymax > 0.0 && ymin >= ymax) {
    throw ConfigError("ymin must be < ymax");
  }
  if (!(scan_lo > 0.0 && scan_lo < scan_hi)) {
    throw ConfigError("scan bounds must satisfy 0 < scan_lo < scan_hi");
  }
  if (grid_per_decade < 1 || grid_per_decade > 10000) {
    throw ConfigError("grid_per_decade out of range");
  }
  if (!(laneemden_ymax >= 1e3)) {
    throw ConfigError("laneemden_ymax must be >= 1e3");
  }
}

std::string RunConfig::serialize() const {
  std::ostringstream os;
  os << "gamma=" << fmt(gamma) << "\n"
     << "eps=" << fmt(eps) << "\n"
     << "tol=" << fmt(tol) << "\n"
     << "sonic_tol=" << fmt(sonic_tol) << "\n"
     << "order=" << order << "\n"
     << "delta=" << fmt(delta) << "\n"
     << "ymin=" << fmt(ymin) << "\n"
     << "ymax=" << fmt(ymax) << "\n"
     << "scan_lo=" << fmt(scan_lo) << "\n"
     << "scan_hi=" << fmt(scan_hi) << "\n"
     << "grid_per_decade=" << grid_per_decade << "\n"
     << "laneemden_ymax=" << fmt(laneemden_ymax) << "\n"
     << "out=" << out << "\n"
     << "format=" << (format == OutputFormat::Csv ? "csv" : "json") << "\n";
  return os.str();
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const size_t h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    const size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    if (key == "gamma") {
      cfg.gamma = parse_double(key, val);
    } else if (key == "eps") {
      cfg.eps = parse_double(key, val);
    } else if (key == "tol") {
      cfg.tol = parse_double(key, val);
    } else if (key == "sonic_tol") {
      cfg.sonic_tol = parse_double(key, val);
    } else if (key == "order") {
      cfg.order = parse_int(key, val);
    } else if (key == "delta") {
      cfg.delta = parse_double(key, val);
    } else if (key == "ymin") {
      cfg.ymin = parse_double(key, val);
    } else if (key == "ymax") {
      cfg.ymax = parse_double(key, val);
    } else if (key == "scan_lo") {
      cfg.scan_lo = parse_double(key, val);
    } else if (key == "scan_hi") {
      cfg.scan_hi = parse_double(key, val);
    } else if (key == "grid_per_decade") {
      cfg.grid_per_decade = parse_int(key, val);
    } else if (key == "laneemden_ymax") {
      cfg.laneemden_ymax = parse_double(key, val);
    } else if (key == "out") {
      cfg.out = val;
    } else if (key == "format") {
      if (val == "csv") {
        cfg.format = OutputFormat::Csv;
      } else if (val == "json") {
        cfg.format = OutputFormat::Json;
      } else {
        throw ConfigError("format must be csv or json, got " + val);
      }
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config(os.str());
}

}  // namespace hunter
