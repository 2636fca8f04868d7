#ifndef HRC_CONTRACT_HPP
#define HRC_CONTRACT_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hrc/assertion.hpp"

namespace hrc {

// An assume/guarantee pair over one alphabet.  Construction equalizes the
// two assertions' alphabets by lifting; the pair is stored as given (the
// canonical flag records whether ¬A ⊆ G already holds).
class Contract {
 public:
  Contract();  // (empty, full) over the empty alphabet: the top contract

  static Contract make(const Assertion &assumption, const Assertion &promise);
  static Contract top(const Alphabet &alphabet);     // (∅, full)
  static Contract bottom(const Alphabet &alphabet);  // (full, ∅)

  const Assertion &assumption() const { return assumption_; }
  const Assertion &promise() const { return promise_; }
  const Alphabet &alphabet() const { return assumption_.alphabet(); }
  bool is_canonical() const { return canonical_; }

  // (A, G ∪ ¬A): the largest promise with the same satisfying
  // implementations.  Idempotent.
  Contract canonicalized() const;
  // G ∪ ¬A: every implementation of the contract is a subset of this.
  Assertion max_implementation() const;

  // Structural equality on the stored pair.
  bool operator==(const Contract &o) const;

 private:
  Contract(Assertion assumption, Assertion promise, bool canonical);

  Assertion assumption_;
  Assertion promise_;
  bool canonical_;
};

// Pair equality as predicates (alphabets equalized by lifting).
bool equivalent(const Contract &c1, const Contract &c2);

// True iff M ∩ A ⊆ G, with all alphabets equalized by lifting.
bool satisfies(const Assertion &m, const Contract &c);

// Implementation refinement M ⊆ M'; both must be over the same port set.
bool refines(const Assertion &m, const Assertion &m_prime);

// True iff A ⊇ A' and G ⊆ G' after lifting both contracts to the union
// alphabet.  dominates(C, C') means C is the stronger specification: every
// implementation of C implements C', and C accepts more environments.
bool dominates(const Contract &c, const Contract &c_prime);

// Greatest lower bound (A1 ∪ A2, G1 ∩ G2) and least upper bound
// (A1 ∩ A2, G1 ∪ G2) under dominance.  Both apply the formulas to the pairs
// as stored: for canonical operands the results are canonical, and the
// complement laws below hold by plain set algebra.
Contract meet(const Contract &c1, const Contract &c2);
Contract join(const Contract &c1, const Contract &c2);

// (¬A, ¬G).  meet(complement_contract(C), C) is the bottom contract and
// join(complement_contract(C), C) the top one.
Contract complement_contract(const Contract &c);

// Parallel composition: G = G1 ∩ G2, A = (A1 ∩ A2) ∪ ¬G.  Inputs are
// canonicalized first; the result is always canonical.
Contract compose(const Contract &c1, const Contract &c2);

// ([∀P]A, [∃P]G) on the canonicalized contract, folding single-port
// elimination in alphabetical order.  Ports absent from the alphabet are
// ignored; the result's alphabet loses the eliminated ports.
Contract eliminate(const Contract &c, const std::set<std::string> &ports);

inline constexpr std::size_t kDefaultFusionCap = 8;

// Meet over all non-empty subsets J of the list of eliminate(compose(J), Q).
// Subsets are enumerated in deterministic ascending-bitmask order; inputs
// are canonicalized.  The list size is capped (2^n subsets).
Contract fuse(const std::vector<Contract> &contracts,
              const std::set<std::string> &ports,
              std::size_t max_contracts = kDefaultFusionCap);

}  // namespace hrc

#endif  // HRC_CONTRACT_HPP
