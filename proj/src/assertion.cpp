#include "hrc/assertion.hpp"

#include "hrc/error.hpp"

namespace hrc {

namespace {

Bitset allocate_bits(const Alphabet &alphabet, bool value) {
  if (alphabet.universe_size() > alphabet.max_universe())
    fail(ErrorKind::UniverseTooLarge,
         "universe too large: " + std::to_string(alphabet.universe_size()) +
             " runs exceeds cap " + std::to_string(alphabet.max_universe()));
  return Bitset(alphabet.universe_size(), value);
}

}  // namespace

Assertion::Assertion() : Assertion(Alphabet(), Bitset(1, false)) {}

Assertion::Assertion(Alphabet alphabet, Bitset bits)
    : alphabet_(std::move(alphabet)), bits_(std::move(bits)) {}

Assertion Assertion::empty(const Alphabet &alphabet) {
  return Assertion(alphabet, allocate_bits(alphabet, false));
}

Assertion Assertion::full(const Alphabet &alphabet) {
  return Assertion(alphabet, allocate_bits(alphabet, true));
}

Assertion Assertion::from_indices(const Alphabet &alphabet,
                                  const std::vector<std::uint64_t> &indices) {
  Assertion a = empty(alphabet);
  for (std::uint64_t i : indices) {
    if (i >= alphabet.universe_size())
      fail(ErrorKind::InvalidArgument,
           "run index " + std::to_string(i) + " outside universe");
    a.bits_.set(i);
  }
  return a;
}

Assertion Assertion::from_runs(const Alphabet &alphabet,
                               const std::vector<Run> &runs) {
  Assertion a = empty(alphabet);
  for (const Run &r : runs) a.bits_.set(alphabet.index_of(r));
  return a;
}

Assertion Assertion::from_predicate(
    const Alphabet &alphabet,
    const std::function<bool(std::uint64_t)> &predicate) {
  Assertion a = empty(alphabet);
  for (std::uint64_t i = 0; i < alphabet.universe_size(); ++i)
    if (predicate(i)) a.bits_.set(i);
  return a;
}

bool Assertion::contains(const Run &run) const {
  return bits_.test(alphabet_.index_of(run));
}

std::vector<std::uint64_t> Assertion::indices() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = bits_.find_next(0); i < bits_.size();
       i = bits_.find_next(i + 1))
    out.push_back(i);
  return out;
}

std::vector<Run> Assertion::runs() const {
  std::vector<Run> out;
  for (std::uint64_t i : indices()) out.push_back(alphabet_.run_at(i));
  return out;
}

bool Assertion::operator==(const Assertion &o) const {
  return alphabet_ == o.alphabet_ && bits_ == o.bits_;
}

bool Assertion::same_denotation(const Assertion &o) const {
  if (alphabet_ == o.alphabet_) return bits_ == o.bits_;
  Alphabet joint = alphabet_.union_with(o.alphabet_);
  return lift(joint).bits_ == o.lift(joint).bits_;
}

Assertion Assertion::complement() const {
  return Assertion(alphabet_, ~bits_);
}

Assertion Assertion::intersect(const Assertion &o) const {
  if (alphabet_ == o.alphabet_) return Assertion(alphabet_, bits_ & o.bits_);
  Alphabet joint = alphabet_.union_with(o.alphabet_);
  return Assertion(joint, lift(joint).bits_ & o.lift(joint).bits_);
}

Assertion Assertion::unite(const Assertion &o) const {
  if (alphabet_ == o.alphabet_) return Assertion(alphabet_, bits_ | o.bits_);
  Alphabet joint = alphabet_.union_with(o.alphabet_);
  return Assertion(joint, lift(joint).bits_ | o.lift(joint).bits_);
}

bool Assertion::is_subset(const Assertion &o) const {
  if (alphabet_ == o.alphabet_) return bits_.is_subset_of(o.bits_);
  Alphabet joint = alphabet_.union_with(o.alphabet_);
  return lift(joint).bits_.is_subset_of(o.lift(joint).bits_);
}

Assertion Assertion::lift(const Alphabet &target) const {
  if (alphabet_ == target) return *this;
  if (!target.contains(alphabet_)) {
    if (target.trace_length() != alphabet_.trace_length())
      fail(ErrorKind::DomainMismatch,
           "cannot lift between different trace lengths");
    for (const PortDecl &p : alphabet_.ports()) {
      if (!target.has_port(p.name))
        fail(ErrorKind::UnknownName,
             "target alphabet lacks port '" + p.name + "'");
      if (target.port(target.port_index(p.name)).domain != p.domain)
        fail(ErrorKind::DomainMismatch,
             "port '" + p.name + "' has conflicting domains");
    }
  }

  Assertion out = empty(target);
  const unsigned length = alphabet_.trace_length();
  std::vector<std::size_t> target_port;  // source port -> target port index
  target_port.reserve(alphabet_.ports().size());
  for (const PortDecl &p : alphabet_.ports())
    target_port.push_back(target.port_index(p.name));

  for (std::uint64_t t = 0; t < target.universe_size(); ++t) {
    std::uint64_t src = 0;
    for (std::size_t i = 0; i < target_port.size(); ++i)
      for (unsigned s = 0; s < length; ++s)
        src += alphabet_.digit_stride(i, s) * target.digit(t, target_port[i], s);
    if (bits_.test(src)) out.bits_.set(t);
  }
  return out;
}

Assertion Assertion::eliminate(const std::string &port, bool forall) const {
  if (!alphabet_.has_port(port)) return *this;
  const std::size_t pi = alphabet_.port_index(port);
  const unsigned length = alphabet_.trace_length();
  const std::uint64_t radix = alphabet_.port(pi).domain.size();

  Alphabet reduced = alphabet_.without_port(port);
  Assertion out = Assertion(reduced, allocate_bits(reduced, false));

  // Extensions of a reduced run differ only in the eliminated port's digits.
  std::uint64_t ext_count = 1;
  for (unsigned s = 0; s < length; ++s) ext_count *= radix;

  for (std::uint64_t r = 0; r < reduced.universe_size(); ++r) {
    // Base index in the full universe with the eliminated digits at zero.
    std::uint64_t base = 0;
    for (std::size_t i = 0; i < reduced.ports().size(); ++i) {
      std::size_t full_port = i < pi ? i : i + 1;
      for (unsigned s = 0; s < length; ++s)
        base += alphabet_.digit_stride(full_port, s) * reduced.digit(r, i, s);
    }
    bool acc = forall;
    for (std::uint64_t e = 0; e < ext_count; ++e) {
      std::uint64_t full = base;
      std::uint64_t rest = e;
      for (unsigned s = length; s-- > 0;) {
        full += alphabet_.digit_stride(pi, s) * (rest % radix);
        rest /= radix;
      }
      bool member = bits_.test(full);
      if (forall)
        acc = acc && member;
      else
        acc = acc || member;
      if (acc != forall) break;
    }
    if (acc) out.bits_.set(r);
  }
  return out;
}

Assertion Assertion::forall_eliminate(const std::string &port) const {
  return eliminate(port, true);
}

Assertion Assertion::exists_eliminate(const std::string &port) const {
  return eliminate(port, false);
}

Assertion Assertion::forall_eliminate(const std::set<std::string> &ports) const {
  Assertion out = *this;
  for (const std::string &p : ports) out = out.eliminate(p, true);
  return out;
}

Assertion Assertion::exists_eliminate(const std::set<std::string> &ports) const {
  Assertion out = *this;
  for (const std::string &p : ports) out = out.eliminate(p, false);
  return out;
}

bool Assertion::is_receptive(const std::set<std::string> &ports) const {
  Alphabet sub = alphabet_.restricted_to(ports);
  if (ports.size() != sub.ports().size()) {
    // restricted_to validated names, so this cannot happen; keep the check
    // for safety against duplicate entries.
    fail(ErrorKind::UnknownName, "unknown port in receptiveness check");
  }
  Bitset seen(sub.universe_size(), false);
  std::vector<std::size_t> map;  // sub port -> own port index
  map.reserve(sub.ports().size());
  for (const PortDecl &p : sub.ports()) map.push_back(alphabet_.port_index(p.name));

  const unsigned length = alphabet_.trace_length();
  for (std::uint64_t i = bits_.find_next(0); i < bits_.size();
       i = bits_.find_next(i + 1)) {
    std::uint64_t proj = 0;
    for (std::size_t k = 0; k < map.size(); ++k)
      for (unsigned s = 0; s < length; ++s)
        proj += sub.digit_stride(k, s) * alphabet_.digit(i, map[k], s);
    seen.set(proj);
  }
  return seen.all();
}

}  // namespace hrc
