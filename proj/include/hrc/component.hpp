#ifndef HRC_COMPONENT_HPP
#define HRC_COMPONENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "hrc/profile.hpp"

namespace hrc {

// A named bundle of contracts plus an optional implementation.  The ports
// the component keeps to itself (Q) are exactly the ports marked local in
// the attached contracts' profiles.
struct RichComponent {
  std::string name;
  std::vector<ProfiledContract> contracts;
  std::optional<ProfiledImplementation> implementation;

  std::set<std::string> local_ports() const;
};

struct Diagnostic {
  std::string kind;
  std::string message;
  std::optional<Run> witness;
};

// Outcome of a component or system check.  `contract` is the fused (or
// composed) contract when it could be computed.  The flags are informative;
// `valid` tracks computability plus implementation satisfaction for
// components, and final compatibility for systems.
struct CheckReport {
  std::string subject;
  bool valid = false;
  std::optional<ProfiledContract> contract;
  std::optional<bool> consistent;
  std::optional<bool> compatible;
  std::optional<bool> satisfied;
  std::vector<Diagnostic> diagnostics;
};

// Fuse the component's contracts over its local ports, judge the (projected)
// implementation against the fused contract, and report flags plus
// counterexamples.  Failures surface as diagnostics, never exceptions.
CheckReport check_component(const RichComponent &component);

// Fold profiled composition over the components' fused contracts in list
// order; the verdict is the compatibility (controlled-receptiveness of the
// assumption) of the final contract.
CheckReport check_system(const std::vector<RichComponent> &components);

}  // namespace hrc

#endif  // HRC_COMPONENT_HPP
