#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hunter/config.hpp"
#include "hunter/errors.hpp"

using hunter::parse_config;
using hunter::RunConfig;

TEST_CASE("serialize round-trips losslessly") {
  RunConfig c;
  c.gamma = 1.05;
  c.eps = 0.123456789012345678;
  c.tol = 3e-11;
  c.order = 14;
  c.scan_lo = 1e-5;
  c.grid_per_decade = 17;
  c.out = "/tmp/x.csv";
  c.format = hunter::OutputFormat::Json;
  const std::string s1 = c.serialize();
  const RunConfig d = parse_config(s1);
  CHECK(d.gamma == c.gamma);
  CHECK(d.eps == c.eps);  // bitwise through 17 significant digits
  CHECK(d.tol == c.tol);
  CHECK(d.order == c.order);
  CHECK(d.scan_lo == c.scan_lo);
  CHECK(d.grid_per_decade == c.grid_per_decade);
  CHECK(d.out == c.out);
  CHECK(d.format == c.format);
  CHECK(d.serialize() == s1);
}

TEST_CASE("comments and blank lines are ignored") {
  const RunConfig c = parse_config(
      "# header comment\n"
      "\n"
      "gamma=1.15\n"
      "tol=1e-9  # trailing comment\n");
  CHECK(c.gamma == 1.15);
  CHECK(c.tol == 1e-9);
  CHECK(c.eps == 0.0);  // untouched defaults
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_config("gamma 1.1\n"), hunter::ConfigError);
  CHECK_THROWS_AS(parse_config("unknown_key=3\n"), hunter::ConfigError);
  CHECK_THROWS_AS(parse_config("gamma=abc\n"), hunter::ConfigError);
  CHECK_THROWS_AS(parse_config("format=yaml\n"), hunter::ConfigError);
  CHECK_THROWS_AS(parse_config("order=2.5\n"), hunter::ConfigError);
}

TEST_CASE("validation enforces documented ranges") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.gamma = 1.3;
  CHECK_THROWS_AS(c.validate(), hunter::ConfigError);
  c = RunConfig{};
  c.tol = -1e-10;
  CHECK_THROWS_AS(c.validate(), hunter::ConfigError);
  c = RunConfig{};
  c.order = 0;
  CHECK_THROWS_AS(c.validate(), hunter::ConfigError);
  c = RunConfig{};
  c.scan_lo = 0.4;
  c.scan_hi = 0.2;
  CHECK_THROWS_AS(c.validate(), hunter::ConfigError);
  c = RunConfig{};
  c.grid_per_decade = 0;
  CHECK_THROWS_AS(c.validate(), hunter::ConfigError);
  c = RunConfig{};
  c.laneemden_ymax = 10.0;
  CHECK_THROWS_AS(c.validate(), hunter::ConfigError);
}

TEST_CASE("missing file reports a config error") {
  CHECK_THROWS_AS(hunter::load_config("/nonexistent/path/cfg"),
                  hunter::ConfigError);
}
