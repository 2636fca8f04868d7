#include "hrc/contract.hpp"

#include <algorithm>
#include <cassert>

#include "hrc/error.hpp"

namespace hrc {

namespace {

bool canonical_flag(const Assertion &a, const Assertion &g) {
  return a.complement().is_subset(g);
}

}  // namespace

Contract::Contract()
    : Contract(Assertion::empty(Alphabet()), Assertion::full(Alphabet()),
               true) {}

Contract::Contract(Assertion assumption, Assertion promise, bool canonical)
    : assumption_(std::move(assumption)),
      promise_(std::move(promise)),
      canonical_(canonical) {}

Contract Contract::make(const Assertion &assumption, const Assertion &promise) {
  if (assumption.alphabet() == promise.alphabet()) {
    return Contract(assumption, promise, canonical_flag(assumption, promise));
  }
  Alphabet joint = assumption.alphabet().union_with(promise.alphabet());
  Assertion a = assumption.lift(joint);
  Assertion g = promise.lift(joint);
  bool flag = canonical_flag(a, g);
  return Contract(std::move(a), std::move(g), flag);
}

Contract Contract::top(const Alphabet &alphabet) {
  return Contract(Assertion::empty(alphabet), Assertion::full(alphabet), true);
}

Contract Contract::bottom(const Alphabet &alphabet) {
  return Contract(Assertion::full(alphabet), Assertion::empty(alphabet), true);
}

Contract Contract::canonicalized() const {
  if (canonical_) return *this;
  return Contract(assumption_, promise_.unite(assumption_.complement()), true);
}

Assertion Contract::max_implementation() const {
  return promise_.unite(assumption_.complement());
}

bool Contract::operator==(const Contract &o) const {
  return assumption_ == o.assumption_ && promise_ == o.promise_;
}

bool equivalent(const Contract &c1, const Contract &c2) {
  return c1.assumption().same_denotation(c2.assumption()) &&
         c1.promise().same_denotation(c2.promise());
}

bool satisfies(const Assertion &m, const Contract &c) {
  Alphabet joint = m.alphabet().union_with(c.alphabet());
  Assertion ml = m.lift(joint);
  Assertion a = c.assumption().lift(joint);
  Assertion g = c.promise().lift(joint);
  bool via_containment = ml.intersect(a).is_subset(g);
  assert(via_containment ==
             ml.is_subset(g.unite(a.complement())) &&
         "the two satisfaction formulations must agree");
  return via_containment;
}

bool refines(const Assertion &m, const Assertion &m_prime) {
  const Alphabet &a = m.alphabet();
  const Alphabet &b = m_prime.alphabet();
  bool same_ports = a.ports().size() == b.ports().size();
  if (same_ports)
    for (const PortDecl &p : a.ports())
      if (!b.has_port(p.name)) {
        same_ports = false;
        break;
      }
  if (!same_ports)
    fail(ErrorKind::DomainMismatch,
         "refinement requires implementations over the same set of ports");
  return m.is_subset(m_prime);
}

bool dominates(const Contract &c, const Contract &c_prime) {
  return c_prime.assumption().is_subset(c.assumption()) &&
         c.promise().is_subset(c_prime.promise());
}

Contract meet(const Contract &c1, const Contract &c2) {
  return Contract::make(c1.assumption().unite(c2.assumption()),
                        c1.promise().intersect(c2.promise()));
}

Contract join(const Contract &c1, const Contract &c2) {
  return Contract::make(c1.assumption().intersect(c2.assumption()),
                        c1.promise().unite(c2.promise()));
}

Contract complement_contract(const Contract &c) {
  return Contract::make(c.assumption().complement(), c.promise().complement());
}

Contract compose(const Contract &c1, const Contract &c2) {
  Contract k1 = c1.canonicalized();
  Contract k2 = c2.canonicalized();
  Assertion g = k1.promise().intersect(k2.promise());
  Assertion a =
      k1.assumption().intersect(k2.assumption()).unite(g.complement());
  Contract out = Contract::make(a, g);
  assert(out.is_canonical() && "composition must produce a canonical pair");
  return out;
}

Contract eliminate(const Contract &c, const std::set<std::string> &ports) {
  Contract k = c.canonicalized();
  Assertion a = k.assumption();
  Assertion g = k.promise();
  for (const std::string &p : ports) {  // std::set iterates alphabetically
    a = a.forall_eliminate(p);
    g = g.exists_eliminate(p);
  }
  Contract out = Contract::make(a, g);
  assert(out.is_canonical() && "elimination must preserve canonical form");
  return out;
}

Contract fuse(const std::vector<Contract> &contracts,
              const std::set<std::string> &ports,
              std::size_t max_contracts) {
  if (contracts.empty())
    fail(ErrorKind::InvalidArgument, "fusion requires at least one contract");
  if (contracts.size() > max_contracts || contracts.size() > 63)
    fail(ErrorKind::FusionCapExceeded,
         "fusion of " + std::to_string(contracts.size()) +
             " contracts exceeds the cap of " +
             std::to_string(std::min<std::size_t>(max_contracts, 63)));

  std::vector<Contract> canon;
  canon.reserve(contracts.size());
  for (const Contract &c : contracts) canon.push_back(c.canonicalized());

  bool have_result = false;
  Contract result;
  const std::uint64_t n = canon.size();
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    bool have_term = false;
    Contract composite;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (!(mask & (1ull << i))) continue;
      composite = have_term ? compose(composite, canon[i]) : canon[i];
      have_term = true;
    }
    Contract term = eliminate(composite, ports);
    result = have_result ? meet(result, term) : term;
    have_result = true;
  }
  return result;
}

}  // namespace hrc
