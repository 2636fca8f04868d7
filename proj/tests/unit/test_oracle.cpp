#include <doctest.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hrc/assertion.hpp"
#include "hrc/commands.hpp"
#include "hrc/contract.hpp"
#include "hrc/oracle.hpp"
#include "hrc/spec.hpp"

using namespace hrc;

namespace {

const char *kSpecsDir = HRC_SPECS_DIR;
const char *kDataDir = HRC_TEST_DATA_DIR;

Alphabet two() {
  return Alphabet::make({PortDecl::boolean("p"), PortDecl::boolean("q")}, 1);
}

oracle::RunSet set_of(const Alphabet &a, std::set<std::uint64_t> idx) {
  return oracle::RunSet{a, std::move(idx)};
}

Assertion as_assertion(const oracle::RunSet &s) {
  std::vector<std::uint64_t> idx(s.members.begin(), s.members.end());
  return Assertion::from_indices(s.alphabet, idx);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("set primitives agree with the engine on every two-port subset") {
  Alphabet a = two();
  for (std::uint64_t m1 = 0; m1 < 16; ++m1) {
    std::set<std::uint64_t> i1;
    for (std::uint64_t i = 0; i < 4; ++i)
      if (m1 & (1ull << i)) i1.insert(i);
    oracle::RunSet s1 = set_of(a, i1);
    Assertion e1 = as_assertion(s1);
    CHECK(oracle::compare("complement", oracle::complement(s1),
                          e1.complement()) == std::nullopt);
    CHECK(oracle::compare("forall p", oracle::forall_eliminate(s1, "p"),
                          e1.forall_eliminate("p")) == std::nullopt);
    CHECK(oracle::compare("exists q", oracle::exists_eliminate(s1, "q"),
                          e1.exists_eliminate("q")) == std::nullopt);
    CHECK(oracle::is_receptive(s1, {"p"}) == e1.is_receptive({"p"}));
    for (std::uint64_t m2 = 0; m2 < 16; ++m2) {
      std::set<std::uint64_t> i2;
      for (std::uint64_t i = 0; i < 4; ++i)
        if (m2 & (1ull << i)) i2.insert(i);
      oracle::RunSet s2 = set_of(a, i2);
      Assertion e2 = as_assertion(s2);
      CHECK(oracle::compare("intersect", oracle::intersect(s1, s2),
                            e1.intersect(e2)) == std::nullopt);
      CHECK(oracle::compare("unite", oracle::unite(s1, s2), e1.unite(e2)) ==
            std::nullopt);
      CHECK(oracle::is_subset(s1, s2) == e1.is_subset(e2));
    }
  }
}

TEST_CASE("contract operators agree with the engine on every one-port pair") {
  Alphabet a = Alphabet::make({PortDecl::boolean("p")}, 1);
  std::vector<oracle::ContractPair> pairs;
  std::vector<Contract> contracts;
  for (std::uint64_t am = 0; am < 4; ++am)
    for (std::uint64_t gm = 0; gm < 4; ++gm) {
      std::set<std::uint64_t> ai, gi;
      for (std::uint64_t i = 0; i < 2; ++i) {
        if (am & (1ull << i)) ai.insert(i);
        if (gm & (1ull << i)) gi.insert(i);
      }
      pairs.push_back(oracle::make_pair(set_of(a, ai), set_of(a, gi)));
      contracts.push_back(
          Contract::make(as_assertion(set_of(a, ai)),
                         as_assertion(set_of(a, gi))));
    }
  REQUIRE(pairs.size() == 16);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    oracle::ContractPair ci = oracle::canonicalize(pairs[i]);
    Contract ei = contracts[i].canonicalized();
    CHECK(oracle::compare("canon assume", ci.assume, ei.assumption()) ==
          std::nullopt);
    CHECK(oracle::compare("canon promise", ci.promise, ei.promise()) ==
          std::nullopt);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      CHECK(oracle::dominates(pairs[i], pairs[j]) ==
            dominates(contracts[i], contracts[j]));
      oracle::ContractPair om = oracle::meet(pairs[i], pairs[j]);
      Contract em = meet(contracts[i], contracts[j]);
      CHECK(oracle::compare("meet assume", om.assume, em.assumption()) ==
            std::nullopt);
      CHECK(oracle::compare("meet promise", om.promise, em.promise()) ==
            std::nullopt);
      oracle::ContractPair oj = oracle::join(pairs[i], pairs[j]);
      Contract ej = join(contracts[i], contracts[j]);
      CHECK(oracle::compare("join assume", oj.assume, ej.assumption()) ==
            std::nullopt);
      CHECK(oracle::compare("join promise", oj.promise, ej.promise()) ==
            std::nullopt);
      oracle::ContractPair oc = oracle::compose(pairs[i], pairs[j]);
      Contract ec = compose(contracts[i], contracts[j]);
      CHECK(oracle::compare("compose assume", oc.assume, ec.assumption()) ==
            std::nullopt);
      CHECK(oracle::compare("compose promise", oc.promise, ec.promise()) ==
            std::nullopt);
    }
  }
}

TEST_CASE("fusion and elimination agree on a three-contract family") {
  Alphabet a = two();
  auto mk = [&](std::set<std::uint64_t> ai, std::set<std::uint64_t> gi) {
    return oracle::make_pair(set_of(a, std::move(ai)),
                             set_of(a, std::move(gi)));
  };
  auto mke = [&](const oracle::ContractPair &p) {
    return Contract::make(as_assertion(p.assume), as_assertion(p.promise));
  };
  std::vector<oracle::ContractPair> ops = {
      mk({0, 1, 2, 3}, {0, 3}), mk({1, 3}, {0, 1, 3}), mk({0, 2}, {2, 3})};
  std::vector<Contract> eng;
  for (const auto &p : ops) eng.push_back(mke(p));

  for (const std::set<std::string> &ports :
       std::vector<std::set<std::string>>{{}, {"p"}, {"q"}, {"p", "q"}}) {
    oracle::ContractPair of = oracle::fuse(ops, ports);
    Contract ef = fuse(eng, ports);
    CHECK(oracle::compare("fuse assume", of.assume, ef.assumption()) ==
          std::nullopt);
    CHECK(oracle::compare("fuse promise", of.promise, ef.promise()) ==
          std::nullopt);
    oracle::ContractPair oe = oracle::eliminate(ops[0], ports);
    Contract ee = eliminate(eng[0], ports);
    CHECK(oracle::compare("elim assume", oe.assume, ee.assumption()) ==
          std::nullopt);
    CHECK(oracle::compare("elim promise", oe.promise, ee.promise()) ==
          std::nullopt);
  }
}

TEST_CASE("compare reports the first differing run as a witness") {
  Alphabet a = two();
  oracle::RunSet expected = set_of(a, {0, 3});
  Assertion actual = Assertion::from_indices(a, {0, 2});
  auto miss = oracle::compare("planted", expected, actual);
  REQUIRE(miss.has_value());
  CHECK(miss->what == "planted: run is present but should be absent");
  REQUIRE(miss->witness.has_value());
  // First difference in index order is run 2 (in actual, not expected).
  CHECK(a.index_of(*miss->witness) == 2);

  CHECK(oracle::compare("same", expected, as_assertion(expected)) ==
        std::nullopt);
}

TEST_CASE("compare_bool mismatches carry no witness") {
  CHECK(oracle::compare_bool("flag", true, true) == std::nullopt);
  auto miss = oracle::compare_bool("flag", true, false);
  REQUIRE(miss.has_value());
  CHECK(miss->what.find("flag") != std::string::npos);
  CHECK(!miss->witness.has_value());
}

TEST_CASE("every shipped specification verifies with zero mismatches") {
  for (const char *name :
       {"/monitoring.hrc", "/units.hrc", "/traffic.hrc"}) {
    std::string path = std::string(kSpecsDir) + name;
    LoadedSpec spec = load_spec_file(path);
    std::vector<oracle::Mismatch> misses =
        oracle::verify_model(spec.doc, spec.model);
    CAPTURE(path);
    CHECK(misses.empty());
  }
  for (const char *name : {"/clash.hrc", "/empty.hrc"}) {
    std::string path = std::string(kDataDir) + name;
    LoadedSpec spec = load_spec_file(path);
    CHECK(oracle::verify_model(spec.doc, spec.model).empty());
  }
}

TEST_CASE("verify_model catches a corrupted elaboration") {
  std::string path = std::string(kSpecsDir) + "/monitoring.hrc";
  LoadedSpec spec = load_spec_file(path);
  const SpecDocument &doc = spec.doc;
  Model &model = spec.model;
  // Flip one run in a named assertion: the oracle recomputes it from the
  // document and must flag the difference with a genuine witness.
  Assertion &tle = model.assertions.at("TLE");
  Assertion flipped = tle.contains(0)
                          ? tle.intersect(Assertion::from_indices(
                                              model.alphabet, {0})
                                              .complement())
                          : tle.unite(Assertion::from_indices(model.alphabet,
                                                              {0}));
  tle = flipped;
  std::vector<oracle::Mismatch> misses = oracle::verify_model(doc, model);
  REQUIRE(!misses.empty());
  bool found = false;
  for (const auto &m : misses)
    if (m.what.find("TLE") != std::string::npos) found = true;
  CHECK(found);
}

}  // TEST_SUITE
