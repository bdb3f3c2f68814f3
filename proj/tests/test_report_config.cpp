#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "ncgkk/config.hpp"
#include "ncgkk/report.hpp"

using namespace ncgkk;

namespace {

std::string write_temp(const std::string &name, const std::string &body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

} // namespace

TEST_CASE("report status and ordering") {
  VerificationReport r("demo");
  r.add("b.second", "second", true, "");
  r.add("a.first", "first", true, "0");
  CHECK(r.passed());
  r.add("c.third", "third", false, "witness");
  CHECK_FALSE(r.passed());
  CHECK(r.count(CheckStatus::fail) == 1);
  const auto checks = r.checks();
  REQUIRE(checks.size() == 3);
  CHECK(checks[0].id == "a.first");
  CHECK(checks[2].id == "c.third");
  CHECK_THROWS_AS(r.add("a.first", "again", true, ""), std::logic_error);
}

TEST_CASE("skipped checks do not fail a report") {
  VerificationReport r("demo");
  r.add({"x", "skipped", CheckStatus::skip, "not run"});
  CHECK(r.passed());
}

TEST_CASE("text report is deterministic and carries no timing") {
  VerificationReport r("demo");
  r.add("a", "first", true, "0");
  r.add("b", "second", false, "w");
  r.set_seconds(1.25);
  const auto text = r.to_text();
  CHECK(text == "[pass] a: first (0)\n[fail] b: second (w)\nsuite demo: 1 passed, 1 failed, 0 skipped: FAIL\n");
  r.set_seconds(9.0);
  CHECK(r.to_text() == text);
  CHECK(r.to_json().find("\"seconds\"") != std::string::npos);
}

TEST_CASE("config defaults validate") {
  Config c;
  CHECK_NOTHROW(c.validate());
  c.kmax = -1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("config file overrides defaults") {
  const auto path = write_temp("ncgkk_cfg_ok.toml", "# comment\n[torus]\nbox = 5\ntheta = 0.3\n[run]\nseed = 7\n");
  Config c;
  apply_config_file(c, path);
  CHECK(c.box == 5);
  CHECK(c.theta == 0.3);
  CHECK(c.seed == 7);
  CHECK(c.margin == 2);
  CHECK(c.echo().at("box") == "5");
}

TEST_CASE("config file errors") {
  Config c;
  CHECK_THROWS_AS(apply_config_file(c, write_temp("ncgkk_cfg_bad1.toml", "[torus]\nwidth = 3\n")), ConfigError);
  CHECK_THROWS_AS(apply_config_file(c, write_temp("ncgkk_cfg_bad2.toml", "[torus]\nbox = eight\n")), ConfigError);
  CHECK_THROWS_AS(apply_config_file(c, write_temp("ncgkk_cfg_bad3.toml", "box = 8\n")), ConfigError);
  CHECK_THROWS_AS(
      apply_config_file(c, write_temp("ncgkk_cfg_bad4.toml", "[derivations]\nlower.c = \"1 * x^0 * a^0 * b^0\"\n")),
      ConfigError);
}

TEST_CASE("derivation overrides replace one table entry") {
  const auto path =
      write_temp("ncgkk_cfg_der.toml", "[derivations]\nlower.b = \"-3 * x^0 * a^-1 * b^0\"\n");
  Config c;
  apply_config_file(c, path);
  CHECK(c.derivations_overridden);
  CHECK(c.derivations.lower[static_cast<std::size_t>(Letter::b)] ==
        NormalFormElement::monomial({0, -1, 0}, PhaseScalar(-3)));
  CHECK(c.derivations.lower[static_cast<std::size_t>(Letter::a)] ==
        DerivationTable::standard().lower[static_cast<std::size_t>(Letter::a)]);
  CHECK(c.echo().at("derivations") == "overridden");
}

TEST_CASE("seed from the environment") {
  Config c;
  ::setenv("NCGKK_SEED", "1234", 1);
  apply_environment(c);
  ::unsetenv("NCGKK_SEED");
  CHECK(c.seed == 1234);
  ::setenv("NCGKK_SEED", "x", 1);
  CHECK_THROWS_AS(apply_environment(c), ConfigError);
  ::unsetenv("NCGKK_SEED");
}
