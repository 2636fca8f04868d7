#include "hrc/component.hpp"

#include "hrc/error.hpp"

namespace hrc {

namespace {

std::string kind_of(const Error &e) {
  switch (e.kind()) {
    case ErrorKind::CompositionClash:
      return "composition-clash";
    case ErrorKind::ProfileMismatch:
      return "profile-mismatch";
    case ErrorKind::FusionCapExceeded:
      return "fusion-cap";
    case ErrorKind::NotReceptive:
      return "not-receptive";
    case ErrorKind::UniverseTooLarge:
      return "universe-too-large";
    default:
      return "error";
  }
}

// First run of `bad` in codec order, as a counterexample witness.
std::optional<Run> first_run(const Assertion &bad) {
  std::vector<std::uint64_t> indices = bad.indices();
  if (indices.empty()) return std::nullopt;
  return bad.alphabet().run_at(indices.front());
}

}  // namespace

std::set<std::string> RichComponent::local_ports() const {
  std::set<std::string> q;
  for (const ProfiledContract &c : contracts) {
    const std::set<std::string> &l = c.profile().local();
    q.insert(l.begin(), l.end());
  }
  return q;
}

CheckReport check_component(const RichComponent &component) {
  CheckReport report;
  report.subject = component.name;
  report.valid = true;

  if (component.contracts.empty()) {
    report.diagnostics.push_back(
        {"info", "component '" + component.name + "' has no contracts", {}});
    return report;
  }

  std::set<std::string> q = component.local_ports();
  ProfiledContract fused;
  try {
    fused = fuse(component.contracts, q);
  } catch (const Error &e) {
    report.valid = false;
    report.diagnostics.push_back(
        {kind_of(e),
         "fusion undefined for component '" + component.name + "': " + e.what(),
         {}});
    return report;
  }
  report.contract = fused;
  report.consistent = is_consistent(fused);
  report.compatible = is_compatible(fused);
  if (!*report.consistent)
    report.diagnostics.push_back(
        {"inconsistent",
         "fused promise of '" + component.name +
             "' is not receptive to its uncontrolled ports",
         {}});
  if (!*report.compatible)
    report.diagnostics.push_back(
        {"incompatible",
         "fused assumption of '" + component.name +
             "' is not receptive to its controlled ports",
         {}});

  if (!component.implementation) return report;

  // Hide the component's local ports before the satisfaction judgment: the
  // implementation's observable behavior is its projection onto the fused
  // contract's ports.
  const ProfiledImplementation &impl = *component.implementation;
  ProfiledImplementation projected;
  try {
    projected = ProfiledImplementation::make(
        impl.profile().without(q), impl.behavior().exists_eliminate(q));
  } catch (const Error &e) {
    report.valid = false;
    report.diagnostics.push_back(
        {kind_of(e),
         "implementation of '" + component.name +
             "' cannot be projected onto the contract ports: " + e.what(),
         {}});
    return report;
  }

  if (!(projected.profile() == fused.profile())) {
    report.valid = false;
    report.satisfied = false;
    report.diagnostics.push_back(
        {"profile-mismatch",
         "implementation profile of '" + component.name +
             "' differs from the fused contract's profile",
         {}});
    return report;
  }

  bool sat = satisfies(projected, fused);
  report.satisfied = sat;
  if (!sat) {
    report.valid = false;
    Assertion violating =
        projected.behavior().intersect(fused.promise().complement());
    report.diagnostics.push_back(
        {"satisfaction-violation",
         "implementation of '" + component.name +
             "' has runs outside the fused promise",
         first_run(violating)});
  }
  return report;
}

CheckReport check_system(const std::vector<RichComponent> &components) {
  if (components.empty())
    fail(ErrorKind::InvalidArgument, "system check requires components");
  if (components.size() == 1) return check_component(components.front());

  CheckReport report;
  report.subject = components.front().name;
  for (std::size_t i = 1; i < components.size(); ++i)
    report.subject += "+" + components[i].name;
  report.valid = true;

  std::vector<ProfiledContract> fused;
  for (const RichComponent &c : components) {
    CheckReport sub = check_component(c);
    for (const Diagnostic &d : sub.diagnostics)
      if (d.kind != "info") report.diagnostics.push_back(d);
    if (!sub.contract) {
      report.valid = false;
      report.diagnostics.push_back(
          {"error",
           "component '" + c.name + "' has no fused contract to compose", {}});
      return report;
    }
    fused.push_back(*sub.contract);
  }

  ProfiledContract composite = fused.front();
  std::string composed_names = components.front().name;
  for (std::size_t i = 1; i < fused.size(); ++i) {
    try {
      composite = compose(composite, fused[i]);
    } catch (const Error &e) {
      report.valid = false;
      report.diagnostics.push_back(
          {kind_of(e),
           "composition of '" + composed_names + "' with '" +
               components[i].name + "' failed: " + e.what(),
           {}});
      return report;
    }
    composed_names += "+" + components[i].name;
    report.diagnostics.push_back(
        {"compose-step", "composed '" + composed_names + "'", {}});
  }

  report.contract = composite;
  report.consistent = is_consistent(composite);
  bool compat =
      composite.assumption().is_receptive(composite.profile().controlled());
  report.compatible = compat;
  report.valid = compat;
  if (!compat) {
    report.diagnostics.push_back(
        {"incompatible",
         "assumption of the composed system is not receptive to its "
         "controlled ports",
         {}});
  }
  return report;
}

}  // namespace hrc
