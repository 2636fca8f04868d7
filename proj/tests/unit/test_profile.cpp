#include <doctest.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hrc/alphabet.hpp"
#include "hrc/assertion.hpp"
#include "hrc/contract.hpp"
#include "hrc/error.hpp"
#include "hrc/profile.hpp"

using namespace hrc;

namespace {

Alphabet uv() {
  return Alphabet::make({PortDecl::boolean("u"), PortDecl::boolean("v")}, 1);
}

bool val(const Run &r, const std::string &port) {
  return r.values.at(port)[0] == "true";
}

Assertion by(const Alphabet &alpha, bool (*pred)(const Run &)) {
  return Assertion::from_predicate(alpha, [&](std::uint64_t i) {
    Run r = alpha.run_at(i);
    return pred(r);
  });
}

// visible {u, v}, no locals, u controlled.
Profile ctrl_u() { return Profile::make({"u", "v"}, {}, {"v"}, {"u"}); }
// visible {u, v}, no locals, v controlled.
Profile ctrl_v() { return Profile::make({"u", "v"}, {}, {"u"}, {"v"}); }
// visible {u, v}, nothing controlled.
Profile ctrl_none() { return Profile::make({"u", "v"}, {}, {"u", "v"}, {}); }

std::vector<Assertion> all_subsets(const Alphabet &alpha) {
  std::vector<Assertion> out;
  const std::uint64_t n = alpha.universe_size();
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<std::uint64_t> idx;
    for (std::uint64_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) idx.push_back(i);
    out.push_back(Assertion::from_indices(alpha, idx));
  }
  return out;
}

}  // namespace

TEST_SUITE("profile") {

TEST_CASE("profiles are a double partition of one port set") {
  Profile p = ctrl_u();
  CHECK(p.ports() == std::set<std::string>({"u", "v"}));
  CHECK(p.controlled() == std::set<std::string>({"u"}));
  CHECK(p.uncontrolled() == std::set<std::string>({"v"}));
  CHECK(p.local().empty());

  Profile dropped = p.without({"u"});
  CHECK(dropped.ports() == std::set<std::string>({"v"}));
  CHECK(dropped.controlled().empty());

  CHECK_THROWS_AS(Profile::make({"u"}, {"u"}, {"u"}, {}), Error);
  CHECK_THROWS_AS(Profile::make({"u"}, {}, {"u"}, {"u"}), Error);
  try {
    Profile::make({"u", "v"}, {}, {"u"}, {});
    FAIL("expected a partition coverage error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("implementations must accept every uncontrolled history") {
  Alphabet a = uv();
  // u := v accepts any input v.
  Assertion follower = by(a, [](const Run &r) { return val(r, "u") == val(r, "v"); });
  ProfiledImplementation ok = ProfiledImplementation::make(ctrl_u(), follower);
  CHECK(ok.behavior() == follower);
  // A behavior that pins u high accepts any v, but rejects the u=false
  // histories, so it cannot treat u as an input.
  Assertion pins_u = by(a, [](const Run &r) { return val(r, "u"); });
  CHECK(ProfiledImplementation::make(ctrl_u(), pins_u).behavior() == pins_u);
  try {
    ProfiledImplementation::make(ctrl_v(), pins_u);
    FAIL("expected a receptiveness rejection");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotReceptive);
  }
  // The port sets must line up exactly.
  Assertion narrow = Assertion::full(a.restricted_to({"u"}));
  CHECK_THROWS_AS(ProfiledImplementation::make(ctrl_u(), narrow), Error);
}

TEST_CASE("implementation composition unions roles and intersects behavior") {
  Alphabet a = uv();
  Assertion u_follows = by(a, [](const Run &r) { return val(r, "u") == val(r, "v"); });
  Assertion anything = Assertion::full(a);
  ProfiledImplementation left = ProfiledImplementation::make(ctrl_u(), u_follows);
  ProfiledImplementation right = ProfiledImplementation::make(ctrl_v(), anything);
  ProfiledImplementation both = compose(left, right);
  CHECK(both.profile().controlled() == std::set<std::string>({"u", "v"}));
  CHECK(both.profile().uncontrolled().empty());
  CHECK(both.behavior() == u_follows);

  CHECK_THROWS_AS(compose(left, left), Error);  // u owned twice
  try {
    compose(left, ProfiledImplementation::make(ctrl_u(), anything));
    FAIL("expected a controlled-port clash");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::CompositionClash);
  }
}

TEST_CASE("composing implementations can surface lost receptiveness") {
  Alphabet a = Alphabet::make({PortDecl::boolean("u"), PortDecl::boolean("v"),
                               PortDecl::boolean("w")},
                              1);
  // u := v composed with v := !u is a contradiction: the composite has no
  // runs at all and so rejects every history of the leftover input w.
  Assertion copy = by(a, [](const Run &r) { return val(r, "u") == val(r, "v"); });
  Assertion invert = by(a, [](const Run &r) { return val(r, "v") != val(r, "u"); });
  Profile owns_u = Profile::make({"u", "v", "w"}, {}, {"v", "w"}, {"u"});
  Profile owns_v = Profile::make({"u", "v", "w"}, {}, {"u", "w"}, {"v"});
  ProfiledImplementation m1 = ProfiledImplementation::make(owns_u, copy);
  ProfiledImplementation m2 = ProfiledImplementation::make(owns_v, invert);
  try {
    compose(m1, m2);
    FAIL("expected the composite to fail receptiveness");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotReceptive);
  }
}

TEST_CASE("profiled contracts canonicalize on construction") {
  Alphabet a = uv();
  Assertion assume = by(a, [](const Run &r) { return val(r, "v"); });
  Assertion promise = by(a, [](const Run &r) { return val(r, "u"); });
  ProfiledContract c = ProfiledContract::make(ctrl_u(), assume, promise);
  CHECK(c.contract().is_canonical());
  CHECK(c.assumption() == assume);
  CHECK(c.promise() == promise.unite(assume.complement()));
}

TEST_CASE("consistency and compatibility are receptiveness checks") {
  Alphabet a = uv();
  // Promise u := v: receptive to v, so a contract controlling u is
  // consistent; its trivial assumption is receptive to u, so compatible.
  ProfiledContract good = ProfiledContract::make(
      ctrl_u(), Assertion::full(a),
      by(a, [](const Run &r) { return val(r, "u") == val(r, "v"); }));
  CHECK(is_consistent(good));
  CHECK(is_compatible(good));

  // A promise that pins the input u can only be honored by controlling u.
  ProfiledContract backwards = ProfiledContract::make(
      ctrl_v(), Assertion::full(a),
      by(a, [](const Run &r) { return val(r, "u"); }));
  CHECK(!is_consistent(backwards));

  // An assumption pinning the controlled port is incompatible.
  ProfiledContract demanding = ProfiledContract::make(
      ctrl_u(), by(a, [](const Run &r) { return !val(r, "u"); }),
      Assertion::full(a));
  CHECK(!is_compatible(demanding));
  CHECK(is_consistent(demanding));
}

TEST_CASE("profiled satisfaction needs the same profile and containment") {
  Alphabet a = uv();
  Assertion copy = by(a, [](const Run &r) { return val(r, "u") == val(r, "v"); });
  ProfiledImplementation m = ProfiledImplementation::make(ctrl_u(), copy);
  ProfiledContract c = ProfiledContract::make(ctrl_u(), Assertion::full(a), copy);
  ProfiledContract other = ProfiledContract::make(ctrl_v(), Assertion::full(a),
                                                  Assertion::full(a));
  CHECK(satisfies(m, c));
  CHECK(!satisfies(m, other));  // profiles differ, so never satisfied
  CHECK(refines(m, m));
  CHECK(dominates(c, c));
  CHECK(!dominates(c, other));
}

TEST_CASE("the boolean operations require equal profiles") {
  Alphabet a = uv();
  ProfiledContract c1 = ProfiledContract::make(ctrl_u(), Assertion::full(a),
                                               Assertion::full(a));
  ProfiledContract c2 = ProfiledContract::make(ctrl_v(), Assertion::full(a),
                                               Assertion::full(a));
  try {
    meet(c1, c2);
    FAIL("expected a profile mismatch");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::ProfileMismatch);
  }
  CHECK_THROWS_AS(join(c1, c2), Error);

  ProfiledContract same = ProfiledContract::make(
      ctrl_u(), by(a, [](const Run &r) { return val(r, "v"); }),
      by(a, [](const Run &r) { return val(r, "u"); }));
  ProfiledContract glb = meet(c1, same);
  CHECK(glb.profile() == ctrl_u());
  CHECK(glb.contract() ==
        meet(c1.contract(), same.contract()).canonicalized());
}

TEST_CASE("contract composition: disjoint ownership or a shared viewpoint") {
  Alphabet a = uv();
  ProfiledContract owns_u = ProfiledContract::make(
      ctrl_u(), Assertion::full(a),
      by(a, [](const Run &r) { return val(r, "u") == val(r, "v"); }));
  ProfiledContract owns_v = ProfiledContract::make(
      ctrl_v(), Assertion::full(a), Assertion::full(a));
  ProfiledContract composed = compose(owns_u, owns_v);
  CHECK(composed.profile().controlled() == std::set<std::string>({"u", "v"}));

  // Two viewpoints with one and the same profile compose freely.
  ProfiledContract viewpoint = ProfiledContract::make(
      ctrl_u(), by(a, [](const Run &r) { return val(r, "v"); }),
      Assertion::full(a));
  ProfiledContract same_profile = compose(owns_u, viewpoint);
  CHECK(same_profile.profile() == ctrl_u());

  // Distinct profiles overlapping on a controlled port clash.
  Profile wider = Profile::make({"u", "v"}, {}, {}, {"u", "v"});
  ProfiledContract wide = ProfiledContract::make(wider, Assertion::full(a),
                                                 Assertion::full(a));
  try {
    compose(owns_u, wide);
    FAIL("expected a controlled-port clash");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::CompositionClash);
  }
}

TEST_CASE("pair compatibility depends on who controls what") {
  Alphabet a = uv();
  // An assumption that forbids v=true, meeting a partner that controls v.
  ProfiledContract fussy = ProfiledContract::make(
      ctrl_u(), by(a, [](const Run &r) { return !val(r, "v"); }),
      Assertion::full(a));
  ProfiledContract v_owner = ProfiledContract::make(
      ctrl_v(), Assertion::full(a), Assertion::full(a));
  CHECK(!are_compatible(fussy, v_owner));

  // The same assumption is fine when nobody claims v.
  ProfiledContract bystander = ProfiledContract::make(
      ctrl_none(), Assertion::full(a), Assertion::full(a));
  CHECK(are_compatible(fussy, bystander));

  // Two fully permissive contracts with disjoint ownership are compatible.
  ProfiledContract easy_u = ProfiledContract::make(
      ctrl_u(), Assertion::full(a), Assertion::full(a));
  ProfiledContract easy_v = ProfiledContract::make(
      ctrl_v(), Assertion::full(a), Assertion::full(a));
  CHECK(are_compatible(easy_u, easy_v));

  // The lattice top (∅, full) is degenerate: an empty assumption admits no
  // environment at all, so it is incompatible with everything.
  ProfiledContract top_u = ProfiledContract::make(
      ctrl_u(), Assertion::empty(a), Assertion::full(a));
  ProfiledContract top_v = ProfiledContract::make(
      ctrl_v(), Assertion::empty(a), Assertion::full(a));
  CHECK(!are_compatible(top_u, top_v));
}

TEST_CASE("profiled fusion tracks the profile through elimination") {
  Alphabet a = uv();
  ProfiledContract c = ProfiledContract::make(
      ctrl_u(), Assertion::full(a),
      by(a, [](const Run &r) { return val(r, "u") == val(r, "v"); }));
  ProfiledContract same = ProfiledContract::make(
      ctrl_u(), by(a, [](const Run &r) { return val(r, "v"); }),
      Assertion::full(a));
  ProfiledContract fused = fuse({c, same}, {"u"});
  CHECK(fused.profile().ports() == std::set<std::string>({"v"}));
  CHECK(fused.profile().controlled().empty());
  CHECK(fused.contract() ==
        fuse({c.contract(), same.contract()}, {"u"}));

  try {
    fuse({c, same}, {"zz"});
    FAIL("expected an unknown fusion port");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::UnknownName);
  }

  // Families with genuinely different profiles cannot be met.
  ProfiledContract other = ProfiledContract::make(
      ctrl_v(), Assertion::full(a), Assertion::full(a));
  try {
    fuse({c, other}, {});
    FAIL("expected a profile mismatch inside the fusion meet");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::ProfileMismatch);
  }
}

TEST_CASE("widening the promise by canonicalization keeps consistency") {
  Alphabet a = uv();
  std::vector<Assertion> subsets = all_subsets(a);
  std::vector<std::set<std::string>> port_sets = {{}, {"u"}, {"v"}, {"u", "v"}};
  for (const Assertion &g : subsets)
    for (const Assertion &assume : subsets)
      for (const std::set<std::string> &ports : port_sets)
        if (g.is_receptive(ports))
          CHECK(g.unite(assume.complement()).is_receptive(ports));
}

TEST_CASE("profiled compositionality on a small exhaustive family") {
  Alphabet a = uv();
  std::vector<Assertion> sets = {
      Assertion::empty(a), Assertion::full(a),
      by(a, [](const Run &r) { return val(r, "u"); }),
      by(a, [](const Run &r) { return val(r, "u") == val(r, "v"); })};
  int checked = 0;
  for (const Assertion &a1 : sets)
    for (const Assertion &g1 : sets)
      for (const Assertion &a2 : sets)
        for (const Assertion &g2 : sets) {
          ProfiledContract c1 = ProfiledContract::make(ctrl_u(), a1, g1);
          ProfiledContract c2 = ProfiledContract::make(ctrl_v(), a2, g2);
          // The canonical promises are the largest implementations; if
          // they are receptive for their profiles, so is any smaller
          // satisfying behavior's union closure.
          ProfiledImplementation m1, m2;
          try {
            m1 = ProfiledImplementation::make(ctrl_u(), c1.promise());
            m2 = ProfiledImplementation::make(ctrl_v(), c2.promise());
          } catch (const Error &) {
            continue;  // a maximal implementation may not be receptive
          }
          ProfiledImplementation m12 = [&] {
            try {
              return compose(m1, m2);
            } catch (const Error &) {
              return ProfiledImplementation();
            }
          }();
          if (m12.profile().ports().empty()) continue;
          ProfiledContract c12 = compose(c1, c2);
          CHECK(satisfies(m1, c1));
          CHECK(satisfies(m2, c2));
          CHECK(satisfies(m12, c12));
          ++checked;
        }
  CHECK(checked > 0);
}

}  // TEST_SUITE
