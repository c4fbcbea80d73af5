#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "fgpair/num/commands.hpp"

using namespace fg;
using namespace fg::num;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("complex literals") {
  CHECK(std::abs(parse_complex("1+2i") - C(1.0, 2.0)) < 1e-15);
  CHECK(std::abs(parse_complex("-0.5i") - C(0.0, -0.5)) < 1e-15);
  CHECK(std::abs(parse_complex("exp(2i*pi/3)") - std::polar(1.0, 2 * kPi / 3)) < 1e-15);
  CHECK(std::abs(parse_complex("2*exp(i*pi/2)") - C(0.0, 2.0)) < 1e-15);
  CHECK(std::abs(parse_complex("3/2") - C(1.5, 0.0)) < 1e-15);
  CHECK_THROWS_AS(parse_complex("exp("), Error);
}

TEST_CASE("verify command: records, routing, unknown names") {
  Report rep = run_verify({"JM2", "FN", "HTW"});
  CHECK(rep.records.size() == 3);
  CHECK(rep.all_pass());
  for (auto& r : rep.records) {
    CHECK(r.kind == "symbolic");
    CHECK(r.residual == "exact-zero");
  }
  Report deg = run_verify({"dJKT1"});
  CHECK(deg.all_pass());
  CHECK(deg.records[0].note.find("reduction") != std::string::npos);
  CHECK_THROWS_AS(run_verify({"NOPE"}), Error);
}

TEST_CASE("diagram command") {
  Report f1 = run_diagram(1);
  CHECK(f1.records.size() == 3);
  CHECK(f1.all_pass());
  Report f2 = run_diagram(2);
  CHECK(f2.all_pass());
  bool has_commutativity = false;
  for (auto& r : f2.records)
    if (r.name.find("commutativity") != std::string::npos) has_commutativity = true;
  CHECK(has_commutativity);
  CHECK_THROWS_AS(run_diagram(3), Error);
}

TEST_CASE("report schema round-trips") {
  Report rep = run_verify({"JM2", "dJKT1"});
  rep.command = "verify --pair JM2 --pair dJKT1";
  std::string text = rep.serialize();
  Report back = Report::parse(text);
  CHECK(back.command == rep.command);
  REQUIRE(back.records.size() == rep.records.size());
  for (size_t i = 0; i < rep.records.size(); ++i) {
    CHECK(back.records[i].name == rep.records[i].name);
    CHECK(back.records[i].kind == rep.records[i].kind);
    CHECK(back.records[i].pass == rep.records[i].pass);
    CHECK(back.records[i].residual == rep.records[i].residual);
    CHECK(back.records[i].note == rep.records[i].note);
  }
  // serialization is deterministic modulo timing
  CHECK(rep.serialize() == Report::parse(rep.serialize(true)).serialize());
}

TEST_CASE("golden report for the symbolic verify command") {
  Report rep = run_verify({"JM2", "dJKT1"});
  rep.command = "verify --pair JM2 --pair dJKT1";
  const std::string golden =
      "fgpair-report v1\n"
      "command: verify --pair JM2 --pair dJKT1\n"
      "check: name=\"compatibility JM2\" kind=symbolic status=PASS residual=exact-zero\n"
      "check: name=\"compatibility dJKT1\" kind=symbolic status=PASS residual=exact-zero "
      "note=\"degenerate: certified via reduction and transform image\"\n"
      "result: PASS\n";
  CHECK(rep.serialize() == golden);
}

TEST_CASE("theorem31 command end to end") {
  TheoremConfig cfg;
  cfg.theta = C(0.5, 0.0);
  cfg.mu = {std::polar(1.0, 2 * kPi / 3), std::polar(2.0, 2 * kPi / 3)};
  cfg.arg_mu = {2 * kPi / 3, 2 * kPi / 3};
  Report rep = run_theorem31(cfg);
  CHECK(rep.all_pass());
  bool saw_ladder = false;
  for (auto& r : rep.records)
    if (r.name.find("ladder") != std::string::npos) saw_ladder = true;
  CHECK(saw_ladder);
}

TEST_CASE("plot export emits parsable rows") {
  TheoremConfig cfg;
  cfg.theta = C(0.5, 0.0);
  std::string table = plot_export(cfg);
  CHECK(table.find("# sigma") == 0);
  size_t rows = 0;
  for (char c : table)
    if (c == '\n') ++rows;
  CHECK(rows > 100);
}

#ifdef FGPAIR_CLI_PATH
TEST_CASE("binary exit codes") {
  std::string base(FGPAIR_CLI_PATH);
  CHECK(std::system((base + " verify --pair JM2 > /dev/null").c_str()) == 0);
  // unknown pair: exit code 2
  int rc = std::system((base + " verify --pair NOPE 2> /dev/null").c_str());
  CHECK(WEXITSTATUS(rc) == 2);
  rc = std::system((base + " diagram --figure 3 2> /dev/null").c_str());
  CHECK(WEXITSTATUS(rc) == 2);
}
#endif
