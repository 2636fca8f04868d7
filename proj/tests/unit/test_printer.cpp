#include <doctest.h>

#include <cstdint>
#include <string>

#include "hrc/commands.hpp"
#include "hrc/printer.hpp"
#include "hrc/report.hpp"
#include "hrc/spec.hpp"

using namespace hrc;

namespace {

const char *kSpecsDir = HRC_SPECS_DIR;

Alphabet two() {
  return Alphabet::make({PortDecl::boolean("a"), PortDecl::boolean("b")}, 1);
}

Alphabet traffic() {
  return Alphabet::make(
      {PortDecl{"light", {"red", "green", "amber"}}, PortDecl::boolean("go")},
      2);
}

}  // namespace

TEST_SUITE("printer") {

TEST_CASE("assertions print as minimized formulas with run counts") {
  Alphabet a = two();
  CHECK(format_assertion(Assertion::empty(a)) == "false (0 runs)");
  CHECK(format_assertion(Assertion::full(a)) == "true (4 runs)");
  CHECK(format_assertion(Assertion::from_indices(a, {2, 3})) == "a (2 runs)");
  CHECK(format_assertion(Assertion::from_indices(a, {0, 2})) == "!b (2 runs)");
  CHECK(format_assertion(Assertion::from_indices(a, {3})) ==
        "a && b (1 runs)");
  CHECK(format_assertion(Assertion::from_indices(a, {1, 2})) ==
        "!a && b || a && !b (2 runs)");
}

TEST_CASE("the minimized formula denotes exactly the printed set") {
  // Every subset of the two-port universe round-trips through its formula.
  Alphabet a = two();
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    std::vector<std::uint64_t> idx;
    for (std::uint64_t i = 0; i < 4; ++i)
      if (mask & (1ull << i)) idx.push_back(i);
    Assertion s = Assertion::from_indices(a, idx);
    std::string formula = assertion_formula(s);
    LoadedSpec round = load_spec_text(
        "ports { a: bool; b: bool }\nassertion E := " + formula);
    CHECK(round.model.assertions.at("E") == s);
  }
}

TEST_CASE("enumerated atoms and step indices") {
  Alphabet t = traffic();
  Assertion not_green_at_0 = Assertion::from_predicate(
      t, [&](std::uint64_t i) { return t.digit(i, 0, 0) != 1; });
  CHECK(format_assertion(not_green_at_0) ==
        "(light[0] == red || light[0] == amber) (24 runs)");
}

TEST_CASE("printing is deterministic") {
  Alphabet a = two();
  Assertion s = Assertion::from_indices(a, {1, 2});
  CHECK(format_assertion(s) == format_assertion(s));
  Assertion again = Assertion::from_indices(a, {2, 1});
  CHECK(format_assertion(s) == format_assertion(again));
}

TEST_CASE("runs render alphabetically in text and JSON") {
  Alphabet a = two();
  CHECK(run_text(a.run_at(1)) == "{a=false, b=true}");
  Alphabet t = traffic();
  CHECK(run_text(t.run_at(13)) == "{go=[false,true], light=[green,red]}");
  CHECK(run_json(t.run_at(13)).dump() ==
        "{\"go\":[false,true],\"light\":[\"green\",\"red\"]}");
  CHECK(runs_json(Assertion::from_indices(a, {1, 2})).dump() ==
        "[{\"a\":[false],\"b\":[true]},{\"a\":[true],\"b\":[false]}]");
}

TEST_CASE("report text shows verdict, contract, and diagnostics") {
  Alphabet a = two();
  Report r;
  r.command = "check sat";
  r.verdict = false;
  r.diagnostics.push_back(
      {"satisfaction-violation", "M does not satisfy C", a.run_at(3)});
  std::string text = report_text(r);
  CHECK(text ==
        "command: check sat\n"
        "verdict: false\n"
        "diagnostics:\n"
        "  [satisfaction-violation] M does not satisfy C "
        "[witness: {a=true, b=true}]\n");

  Report op;
  op.command = "op meet";
  op.contract = Contract::make(Assertion::from_indices(a, {2, 3}),
                               Assertion::full(a));
  CHECK(report_text(op) ==
        "command: op meet\n"
        "contract:\n"
        "  assume: a (2 runs)\n"
        "  promise: true (4 runs)\n");
}

TEST_CASE("report JSON follows the fixed schema") {
  Alphabet a = two();
  Report r;
  r.command = "op meet";
  r.contract = Contract::make(Assertion::from_indices(a, {2, 3}),
                              Assertion::full(a));
  nlohmann::ordered_json j = report_json(r);
  REQUIRE(j.size() == 4);
  auto it = j.begin();
  CHECK(it.key() == "command");
  CHECK((++it).key() == "verdict");
  CHECK((++it).key() == "contract");
  CHECK((++it).key() == "diagnostics");
  CHECK(j["command"] == "op meet");
  CHECK(j["verdict"].is_null());
  CHECK(j["contract"]["assume"].size() == 2);
  CHECK(j["contract"]["promise"].size() == 4);
  CHECK(j["diagnostics"].is_array());

  Report v;
  v.command = "check dom";
  v.verdict = true;
  nlohmann::ordered_json jv = report_json(v);
  CHECK(jv["verdict"] == true);
  CHECK(jv["contract"].is_null());
}

TEST_CASE("text and JSON agree across a real command") {
  LoadedSpec spec = load_spec_file(std::string(kSpecsDir) + "/monitoring.hrc");
  Report r = cmd_op_meet(spec, "Cnom", "Cexc");
  nlohmann::ordered_json j = report_json(r);
  std::string text = report_text(r);
  CHECK(j["contract"]["assume"].size() == 48);
  CHECK(text.find("assume: !f2 || !f1 (48 runs)") != std::string::npos);
  CHECK(j["verdict"].is_null());
  CHECK(text.find("verdict") == std::string::npos);
  // Byte determinism across repeated renderings.
  CHECK(report_text(r) == text);
  CHECK(report_json(r).dump(2) == j.dump(2));
}

}  // TEST_SUITE
