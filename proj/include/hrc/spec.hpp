#ifndef HRC_SPEC_HPP
#define HRC_SPEC_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hrc/component.hpp"
#include "hrc/contract.hpp"
#include "hrc/profile.hpp"

namespace hrc {

// Abstract syntax of boolean expressions over ports.  A bare name may be a
// boolean port anywhere, or an enumerated port / domain symbol inside an
// (in)equality; resolution happens during type checking.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Const, Ref, Not, And, Or, Implies, Eq, Ne };

  Kind kind = Kind::Const;
  bool value = false;     // Const
  std::string name;       // Ref
  ExprPtr lhs, rhs;       // Not uses lhs only
  int line = 0, col = 0;  // 1-based source position

  static ExprPtr constant(bool v, int line, int col);
  static ExprPtr ref(std::string name, int line, int col);
  static ExprPtr unary(Kind k, ExprPtr operand, int line, int col);
  static ExprPtr binary(Kind k, ExprPtr lhs, ExprPtr rhs, int line, int col);
};

enum class ControlMarker { None, Controlled, Uncontrolled };

struct PortSpec {
  PortDecl decl;
  bool is_bool = true;
  bool local_marker = false;
  ControlMarker control = ControlMarker::None;
};

struct AssertionDef {
  std::string name;
  ExprPtr expr;
};

struct ContractDef {
  std::string name;
  ExprPtr assume;
  ExprPtr promise;
};

struct ComponentDef {
  std::string name;
  std::vector<std::string> contract_refs;
  std::vector<std::string> local_ports;
  ExprPtr implementation;  // may be null
};

// Parsed form of a .hrc file.  Definitions keep their source order (used by
// the printer); ports from all blocks are collected in declaration order.
struct SpecDocument {
  unsigned trace_length = 1;
  bool explicit_length = false;
  std::vector<PortSpec> ports;
  std::vector<AssertionDef> assertions;
  std::vector<ContractDef> contracts;
  std::vector<ComponentDef> components;

  enum class ItemKind { Assertion, Contract, Component };
  std::vector<std::pair<ItemKind, std::size_t>> definition_order;

  const PortSpec *find_port(const std::string &name) const;
};

// Parse a complete document; positions in errors are 1-based line/column.
SpecDocument parse_document(const std::string &text);

// Render a document back to concrete syntax.  Reparsing the output yields
// the same denotation for every named entity.
std::string print_document(const SpecDocument &doc);

// Set of runs over `alphabet` on which the expression holds at every step.
// The expression must already be type-correct for the alphabet.
Assertion eval_expr(const ExprPtr &expr, const Alphabet &alphabet);

// Ports referenced by the expression (domain symbols excluded).
void collect_ports(const ExprPtr &expr, const SpecDocument &doc,
                   std::set<std::string> &out);

// Everything a document denotes, evaluated over the full document alphabet.
struct Model {
  Alphabet alphabet;
  std::map<std::string, Assertion> assertions;
  std::map<std::string, Contract> contracts;  // as written, not canonicalized
  // Standalone profiled view of each contract: document markers applied to
  // the ports the contract mentions, everything else visible+uncontrolled.
  std::map<std::string, ProfiledContract> profiled_contracts;

  struct ComponentEntry {
    std::string name;
    std::vector<ProfiledContract> contracts;   // with component-local promotion
    std::optional<Profile> impl_profile;       // promoted likewise
    std::optional<Assertion> impl_behavior;    // receptiveness NOT yet checked
  };
  std::map<std::string, ComponentEntry> components;
};

Model elaborate(const SpecDocument &doc,
                std::uint64_t max_universe = kDefaultUniverseCap);

}  // namespace hrc

#endif  // HRC_SPEC_HPP
