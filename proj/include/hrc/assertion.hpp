#ifndef HRC_ASSERTION_HPP
#define HRC_ASSERTION_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hrc/alphabet.hpp"
#include "hrc/bitset.hpp"

namespace hrc {

// A set of runs over an alphabet, stored as a bitset over the universe in
// codec order.  Binary operations over different alphabets first lift both
// operands to the union alphabet (cylindrical extension); a shared port with
// conflicting domains or trace lengths is an error.
class Assertion {
 public:
  Assertion();  // empty set over the empty alphabet

  static Assertion empty(const Alphabet &alphabet);
  static Assertion full(const Alphabet &alphabet);
  static Assertion from_indices(const Alphabet &alphabet,
                                const std::vector<std::uint64_t> &indices);
  static Assertion from_runs(const Alphabet &alphabet,
                             const std::vector<Run> &runs);
  static Assertion from_predicate(
      const Alphabet &alphabet,
      const std::function<bool(std::uint64_t)> &predicate);

  const Alphabet &alphabet() const { return alphabet_; }
  std::uint64_t count() const { return bits_.count(); }
  bool is_empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all(); }
  bool contains(std::uint64_t run_index) const { return bits_.test(run_index); }
  bool contains(const Run &run) const;
  std::vector<std::uint64_t> indices() const;  // ascending
  std::vector<Run> runs() const;               // ascending codec order

  // Strict equality: identical alphabet and identical member set.
  bool operator==(const Assertion &o) const;
  // Equality as predicates: both sides lifted to the union alphabet.
  bool same_denotation(const Assertion &o) const;

  Assertion complement() const;
  Assertion intersect(const Assertion &o) const;
  Assertion unite(const Assertion &o) const;
  bool is_subset(const Assertion &o) const;

  // Cylindrical extension to a larger alphabet.
  Assertion lift(const Alphabet &target) const;

  // Port-wise quantification; the port leaves the alphabet.  Eliminating a
  // port that is not in the alphabet returns the assertion unchanged.
  Assertion forall_eliminate(const std::string &port) const;
  Assertion exists_eliminate(const std::string &port) const;
  Assertion forall_eliminate(const std::set<std::string> &ports) const;
  Assertion exists_eliminate(const std::set<std::string> &ports) const;

  // True when every run over `ports` is matched by some member's projection.
  bool is_receptive(const std::set<std::string> &ports) const;

  const Bitset &bits() const { return bits_; }

 private:
  Assertion(Alphabet alphabet, Bitset bits);
  Assertion eliminate(const std::string &port, bool forall) const;

  Alphabet alphabet_;
  Bitset bits_;
};

}  // namespace hrc

#endif  // HRC_ASSERTION_HPP
