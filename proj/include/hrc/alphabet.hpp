#ifndef HRC_ALPHABET_HPP
#define HRC_ALPHABET_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace hrc {

// Default limit on the number of runs an alphabet's universe may contain.
inline constexpr std::uint64_t kDefaultUniverseCap = 1ull << 24;

struct PortDecl {
  std::string name;
  std::vector<std::string> domain;

  static PortDecl boolean(std::string name) {
    return PortDecl{std::move(name), {"false", "true"}};
  }

  bool operator==(const PortDecl &o) const = default;
};

// One run: for every port, a sequence of trace_length domain values.
struct Run {
  std::map<std::string, std::vector<std::string>> values;

  bool operator==(const Run &o) const = default;
  bool operator<(const Run &o) const { return values < o.values; }
};

// Restriction of a run to a subset of its ports.
Run project_run(const Run &run, const std::set<std::string> &ports);

// A finite set of typed ports plus a trace length.  Immutable and cheap to
// copy.  Fixes a deterministic codec between run indices and runs: runs are
// ordered lexicographically by (port declaration order, then step, then
// domain order), with port 0 / step 0 most significant.  Construction fails
// when the universe would exceed the configured cap.
class Alphabet {
 public:
  Alphabet();  // no ports, trace length 1, default cap

  static Alphabet make(std::vector<PortDecl> ports, unsigned trace_length,
                       std::uint64_t max_universe = kDefaultUniverseCap);

  const std::vector<PortDecl> &ports() const;
  unsigned trace_length() const;
  std::uint64_t universe_size() const;
  std::uint64_t max_universe() const;

  bool has_port(const std::string &name) const;
  std::size_t port_index(const std::string &name) const;
  const PortDecl &port(std::size_t index) const;

  // Structural equality: same ports in the same order, same domains, same
  // trace length.  The universe cap is operational configuration and is
  // ignored.
  bool operator==(const Alphabet &o) const;

  // True when every port of `sub` appears here with an identical domain and
  // the trace lengths agree.
  bool contains(const Alphabet &sub) const;

  // Domain-value index of (port, step) within the run at `run_index`.
  unsigned digit(std::uint64_t run_index, std::size_t port,
                 unsigned step) const;
  // Contribution of one digit to a run index.
  std::uint64_t digit_stride(std::size_t port, unsigned step) const;

  Run run_at(std::uint64_t run_index) const;
  std::uint64_t index_of(const Run &run) const;

  // Sub-alphabet keeping only `keep`, in this alphabet's port order.
  Alphabet restricted_to(const std::set<std::string> &keep) const;
  // Sub-alphabet with one port removed (absent name is an error).
  Alphabet without_port(const std::string &name) const;
  // Smallest common extension: this alphabet's ports in order, then ports
  // found only in `o`, in `o`'s order.  Shared ports must agree on domains;
  // trace lengths must be equal.
  Alphabet union_with(const Alphabet &o) const;

  struct Data;  // opaque shared state

 private:
  explicit Alphabet(std::shared_ptr<const Data> data);

  std::shared_ptr<const Data> data_;
};

// The set of all runs over an alphabet, in codec order.
class Universe {
 public:
  explicit Universe(Alphabet alphabet);

  const Alphabet &alphabet() const { return alphabet_; }
  std::uint64_t size() const;
  Run run_at(std::uint64_t index) const;
  std::vector<Run> runs() const;  // materialized, index order

 private:
  Alphabet alphabet_;
};

inline Universe enumerate_universe(Alphabet alphabet) {
  return Universe(std::move(alphabet));
}

}  // namespace hrc

#endif  // HRC_ALPHABET_HPP
