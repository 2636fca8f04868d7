#ifndef HRC_ORACLE_HPP
#define HRC_ORACLE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hrc/spec.hpp"

namespace hrc::oracle {

// The brute-force cross-check: every operator result is recomputed from
// definitions by direct enumeration over runs, using an independent run-set
// representation (a sorted index set with std::set algebra).  Only the Run
// and Alphabet types are shared with the engine.
struct RunSet {
  Alphabet alphabet;
  std::set<std::uint64_t> members;
};

RunSet evaluate(const ExprPtr &expr, const Alphabet &alphabet);
RunSet full_set(const Alphabet &alphabet);
RunSet complement(const RunSet &b);
RunSet lift(const RunSet &b, const Alphabet &target);
RunSet intersect(const RunSet &a, const RunSet &b);
RunSet unite(const RunSet &a, const RunSet &b);
RunSet forall_eliminate(const RunSet &b, const std::string &port);
RunSet exists_eliminate(const RunSet &b, const std::string &port);
bool is_subset(const RunSet &a, const RunSet &b);
bool is_receptive(const RunSet &b, const std::set<std::string> &ports);

struct ContractPair {
  RunSet assume;
  RunSet promise;
};

ContractPair make_pair(const RunSet &assume, const RunSet &promise);
ContractPair canonicalize(const ContractPair &c);
bool satisfies(const RunSet &m, const ContractPair &c);
bool dominates(const ContractPair &c, const ContractPair &c_prime);
ContractPair meet(const ContractPair &c1, const ContractPair &c2);
ContractPair join(const ContractPair &c1, const ContractPair &c2);
ContractPair compose(const ContractPair &c1, const ContractPair &c2);
ContractPair eliminate(const ContractPair &c, const std::set<std::string> &ports);
ContractPair fuse(const std::vector<ContractPair> &contracts,
                  const std::set<std::string> &ports);

struct Mismatch {
  std::string what;
  std::optional<Run> witness;
};

// Compare an oracle-computed set against an engine assertion; a mismatch
// carries the first differing run.
std::optional<Mismatch> compare(const std::string &what, const RunSet &expected,
                                const Assertion &actual);
std::optional<Mismatch> compare_bool(const std::string &what, bool expected,
                                     bool actual);

// Recompute every operator result the document gives rise to: named
// assertions, canonical forms and maximal implementations, satisfaction of
// every named assertion against every contract, pairwise dominance, meet,
// join and composition, single-port eliminations, and per-component fusion
// and satisfaction verdicts.
std::vector<Mismatch> verify_model(const SpecDocument &doc, const Model &model);

}  // namespace hrc::oracle

#endif  // HRC_ORACLE_HPP
