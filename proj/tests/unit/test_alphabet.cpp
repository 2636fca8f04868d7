#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "hrc/alphabet.hpp"
#include "hrc/assertion.hpp"
#include "hrc/error.hpp"

using namespace hrc;

namespace {

Alphabet ab2() {
  return Alphabet::make({PortDecl::boolean("a"), PortDecl::boolean("b")}, 1);
}

Alphabet traffic() {
  return Alphabet::make(
      {PortDecl{"light", {"red", "green", "amber"}}, PortDecl::boolean("go")},
      2);
}

}  // namespace

TEST_SUITE("alphabet") {

TEST_CASE("codec orders runs with port 0, step 0 most significant") {
  Alphabet a = ab2();
  REQUIRE(a.universe_size() == 4);
  CHECK(a.run_at(0).values.at("a") == std::vector<std::string>{"false"});
  CHECK(a.run_at(0).values.at("b") == std::vector<std::string>{"false"});
  CHECK(a.run_at(1).values.at("a") == std::vector<std::string>{"false"});
  CHECK(a.run_at(1).values.at("b") == std::vector<std::string>{"true"});
  CHECK(a.run_at(2).values.at("a") == std::vector<std::string>{"true"});
  CHECK(a.run_at(2).values.at("b") == std::vector<std::string>{"false"});
  CHECK(a.run_at(3).values.at("a") == std::vector<std::string>{"true"});
  CHECK(a.run_at(3).values.at("b") == std::vector<std::string>{"true"});
}

TEST_CASE("index_of inverts run_at over the whole universe") {
  for (const Alphabet &a : {ab2(), traffic()}) {
    for (std::uint64_t i = 0; i < a.universe_size(); ++i)
      CHECK(a.index_of(a.run_at(i)) == i);
  }
}

TEST_CASE("enumerated domains keep declaration order") {
  Alphabet t = traffic();
  REQUIRE(t.universe_size() == 36);  // 3^2 * 2^2
  Run first = t.run_at(0);
  CHECK(first.values.at("light") ==
        std::vector<std::string>({"red", "red"}));
  CHECK(first.values.at("go") ==
        std::vector<std::string>({"false", "false"}));
  // Stepping the least significant digit toggles go[1].
  CHECK(t.run_at(1).values.at("go") ==
        std::vector<std::string>({"false", "true"}));
  // light[0] is most significant: the second third starts with green.
  CHECK(t.run_at(12).values.at("light") ==
        std::vector<std::string>({"green", "red"}));
}

TEST_CASE("digit and digit_stride agree with run_at") {
  Alphabet t = traffic();
  for (std::uint64_t i = 0; i < t.universe_size(); ++i) {
    std::uint64_t rebuilt = 0;
    for (std::size_t p = 0; p < t.ports().size(); ++p)
      for (unsigned s = 0; s < t.trace_length(); ++s)
        rebuilt += t.digit(i, p, s) * t.digit_stride(p, s);
    CHECK(rebuilt == i);
  }
}

TEST_CASE("union_with keeps left order then appends right-only ports") {
  Alphabet left = Alphabet::make(
      {PortDecl::boolean("a"), PortDecl::boolean("c")}, 1);
  Alphabet right = Alphabet::make(
      {PortDecl::boolean("b"), PortDecl::boolean("a")}, 1);
  Alphabet u = left.union_with(right);
  REQUIRE(u.ports().size() == 3);
  CHECK(u.ports()[0].name == "a");
  CHECK(u.ports()[1].name == "c");
  CHECK(u.ports()[2].name == "b");
}

TEST_CASE("union_with rejects domain and length mismatches") {
  Alphabet a = Alphabet::make({PortDecl::boolean("a")}, 1);
  Alphabet clash =
      Alphabet::make({PortDecl{"a", {"red", "green", "amber"}}}, 1);
  CHECK_THROWS_AS(a.union_with(clash), Error);
  Alphabet longer = Alphabet::make({PortDecl::boolean("b")}, 2);
  try {
    a.union_with(longer);
    FAIL("expected a trace-length mismatch");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::DomainMismatch);
  }
}

TEST_CASE("restricted_to and without_port preserve declaration order") {
  Alphabet t = traffic();
  Alphabet only_go = t.restricted_to({"go"});
  REQUIRE(only_go.ports().size() == 1);
  CHECK(only_go.ports()[0].name == "go");
  CHECK(only_go.universe_size() == 4);  // 2^2 with trace length 2

  Alphabet no_light = t.without_port("light");
  CHECK(no_light == only_go);
  CHECK_THROWS_AS(t.without_port("nope"), Error);
}

TEST_CASE("structural equality ignores the universe cap") {
  Alphabet small = Alphabet::make({PortDecl::boolean("a")}, 1, 1u << 4);
  Alphabet big = Alphabet::make({PortDecl::boolean("a")}, 1, 1u << 20);
  CHECK(small == big);
  CHECK(small.max_universe() == (1u << 4));
}

TEST_CASE("construction validates ports and the universe cap") {
  CHECK_THROWS_AS(Alphabet::make({PortDecl{"a", {}}}, 1), Error);
  CHECK_THROWS_AS(
      Alphabet::make({PortDecl::boolean("a"), PortDecl::boolean("a")}, 1),
      Error);
  CHECK_THROWS_AS(Alphabet::make({PortDecl::boolean("a")}, 0), Error);
  // A large shape is describable; the cap only fires when a run set is
  // materialized over it.
  std::vector<PortDecl> many;
  for (int i = 0; i < 25; ++i)
    many.push_back(PortDecl::boolean("p" + std::to_string(i)));
  Alphabet wide = Alphabet::make(many, 1);  // 2^25 exceeds the default cap
  CHECK(wide.universe_size() == (1ull << 25));
  try {
    Assertion::full(wide);
    FAIL("expected a universe-cap error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::UniverseTooLarge);
  }
  // The same shape materializes fine under a raised cap.
  Alphabet raised = Alphabet::make(many, 1, 1ull << 26);
  CHECK(Assertion::empty(raised).count() == 0);
}

TEST_CASE("contains accepts sub-alphabets with matching domains") {
  Alphabet t = traffic();
  CHECK(t.contains(t.restricted_to({"light"})));
  CHECK(t.contains(t.restricted_to({"go", "light"})));
  Alphabet other = Alphabet::make({PortDecl::boolean("light")}, 2);
  CHECK(!t.contains(other));  // same name, different domain
}

TEST_CASE("project_run keeps only the requested ports") {
  Alphabet t = traffic();
  Run r = t.run_at(17);
  Run p = project_run(r, {"go"});
  REQUIRE(p.values.size() == 1);
  CHECK(p.values.at("go") == r.values.at("go"));
}

TEST_CASE("universe enumeration matches run_at") {
  Universe u = enumerate_universe(ab2());
  REQUIRE(u.size() == 4);
  std::vector<Run> runs = u.runs();
  REQUIRE(runs.size() == 4);
  for (std::uint64_t i = 0; i < u.size(); ++i) {
    CHECK(runs[i] == u.run_at(i));
    CHECK(runs[i] == u.alphabet().run_at(i));
  }
}

}  // TEST_SUITE
