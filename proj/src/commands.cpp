#include "hrc/commands.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hrc/oracle.hpp"

namespace hrc {

namespace {

const Assertion &named_assertion(const LoadedSpec &spec,
                                 const std::string &name) {
  auto it = spec.model.assertions.find(name);
  if (it == spec.model.assertions.end())
    fail(ErrorKind::UnknownName, "unknown assertion: " + name);
  return it->second;
}

const Contract &named_contract(const LoadedSpec &spec,
                               const std::string &name) {
  auto it = spec.model.contracts.find(name);
  if (it == spec.model.contracts.end())
    fail(ErrorKind::UnknownName, "unknown contract: " + name);
  return it->second;
}

const ProfiledContract &named_profiled(const LoadedSpec &spec,
                                       const std::string &name) {
  auto it = spec.model.profiled_contracts.find(name);
  if (it == spec.model.profiled_contracts.end())
    fail(ErrorKind::UnknownName, "unknown contract: " + name);
  return it->second;
}

const Model::ComponentEntry &named_component(const LoadedSpec &spec,
                                             const std::string &name) {
  auto it = spec.model.components.find(name);
  if (it == spec.model.components.end())
    fail(ErrorKind::UnknownName, "unknown component: " + name);
  return it->second;
}

std::set<std::string> port_set(const LoadedSpec &spec,
                               const std::vector<std::string> &ports) {
  std::set<std::string> out;
  for (const std::string &p : ports) {
    if (!spec.model.alphabet.has_port(p))
      fail(ErrorKind::UnknownName, "unknown port: " + p);
    out.insert(p);
  }
  return out;
}

// Build the checkable component: the attached contracts plus, when present,
// the implementation.  A non-receptive implementation becomes a diagnostic
// on the eventual report rather than an exception.
RichComponent realize(const Model::ComponentEntry &entry,
                      std::vector<Diagnostic> &problems) {
  RichComponent rc;
  rc.name = entry.name;
  rc.contracts = entry.contracts;
  if (entry.impl_behavior) {
    try {
      rc.implementation = ProfiledImplementation::make(*entry.impl_profile,
                                                       *entry.impl_behavior);
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::NotReceptive) throw;
      problems.push_back(Diagnostic{
          "not-receptive",
          "implementation of " + entry.name + " is not receptive: " + e.what(),
          std::nullopt});
    }
  }
  return rc;
}

Report from_check(std::string command, CheckReport check,
                  std::vector<Diagnostic> problems) {
  Report report;
  report.command = std::move(command);
  bool broken = !problems.empty();
  report.verdict = check.valid && !broken;
  if (check.contract) report.contract = check.contract->contract();
  report.diagnostics = std::move(check.diagnostics);
  for (Diagnostic &d : problems) report.diagnostics.push_back(std::move(d));
  return report;
}

}  // namespace

LoadedSpec load_spec_text(const std::string &text,
                          std::uint64_t max_universe) {
  LoadedSpec spec;
  spec.doc = parse_document(text);
  spec.model = elaborate(spec.doc, max_universe);
  return spec;
}

LoadedSpec load_spec_file(const std::string &path,
                          std::uint64_t max_universe) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorKind::InvalidArgument, "cannot open spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_spec_text(buffer.str(), max_universe);
}

Report cmd_check_sat(const LoadedSpec &spec, const std::string &impl,
                     const std::string &contract) {
  Report report;
  report.command = "check sat";
  const Assertion &m = named_assertion(spec, impl);
  const Contract &c = named_contract(spec, contract);
  report.verdict = satisfies(m, c);
  if (!*report.verdict) {
    Assertion bad = m.intersect(c.assumption()).intersect(
        c.promise().complement());
    Diagnostic d;
    d.kind = "satisfaction-violation";
    d.message = impl + " does not satisfy " + contract;
    if (!bad.is_empty())
      d.witness = bad.alphabet().run_at(*bad.indices().begin());
    report.diagnostics.push_back(std::move(d));
  }
  return report;
}

Report cmd_check_dom(const LoadedSpec &spec, const std::string &left,
                     const std::string &right) {
  Report report;
  report.command = "check dom";
  report.verdict = dominates(named_contract(spec, left),
                             named_contract(spec, right));
  return report;
}

Report cmd_op_meet(const LoadedSpec &spec, const std::string &left,
                   const std::string &right) {
  Report report;
  report.command = "op meet";
  report.contract = meet(named_contract(spec, left),
                         named_contract(spec, right));
  return report;
}

Report cmd_op_join(const LoadedSpec &spec, const std::string &left,
                   const std::string &right) {
  Report report;
  report.command = "op join";
  report.contract = join(named_contract(spec, left),
                         named_contract(spec, right));
  return report;
}

Report cmd_op_compose(const LoadedSpec &spec, const std::string &left,
                      const std::string &right) {
  Report report;
  report.command = "op compose";
  report.contract = compose(named_contract(spec, left),
                            named_contract(spec, right));
  return report;
}

Report cmd_op_eliminate(const LoadedSpec &spec, const std::string &contract,
                        const std::vector<std::string> &ports) {
  Report report;
  report.command = "op eliminate";
  report.contract = eliminate(named_contract(spec, contract),
                              port_set(spec, ports));
  return report;
}

Report cmd_op_fuse(const LoadedSpec &spec,
                   const std::vector<std::string> &contracts,
                   const std::vector<std::string> &ports) {
  Report report;
  report.command = "op fuse";
  std::vector<Contract> terms;
  terms.reserve(contracts.size());
  for (const std::string &name : contracts)
    terms.push_back(named_contract(spec, name));
  report.contract = fuse(terms, port_set(spec, ports));
  return report;
}

Report cmd_check_consistent(const LoadedSpec &spec,
                            const std::string &contract) {
  Report report;
  report.command = "check consistent";
  report.verdict = is_consistent(named_profiled(spec, contract));
  return report;
}

Report cmd_check_compatible(const LoadedSpec &spec,
                            const std::string &contract) {
  Report report;
  report.command = "check compatible";
  report.verdict = is_compatible(named_profiled(spec, contract));
  return report;
}

Report cmd_check_compat_pair(const LoadedSpec &spec, const std::string &left,
                             const std::string &right) {
  Report report;
  report.command = "check compat-pair";
  report.verdict = are_compatible(named_profiled(spec, left),
                                  named_profiled(spec, right));
  return report;
}

Report cmd_check_component(const LoadedSpec &spec, const std::string &name) {
  const Model::ComponentEntry &entry = named_component(spec, name);
  std::vector<Diagnostic> problems;
  RichComponent rc = realize(entry, problems);
  return from_check("check component", check_component(rc),
                    std::move(problems));
}

Report cmd_check_system(const LoadedSpec &spec,
                        const std::vector<std::string> &names) {
  if (names.empty())
    fail(ErrorKind::InvalidArgument,
         "check system requires at least one component name");
  std::vector<Diagnostic> problems;
  std::vector<RichComponent> rcs;
  rcs.reserve(names.size());
  for (const std::string &name : names)
    rcs.push_back(realize(named_component(spec, name), problems));
  return from_check("check system", check_system(rcs), std::move(problems));
}

Report cmd_canonicalize(const LoadedSpec &spec, const std::string &contract) {
  Report report;
  report.command = "canonicalize";
  report.contract = named_contract(spec, contract).canonicalized();
  return report;
}

Report cmd_oracle_verify(const LoadedSpec &spec) {
  Report report;
  report.command = "oracle verify";
  std::vector<oracle::Mismatch> mismatches =
      oracle::verify_model(spec.doc, spec.model);
  report.verdict = mismatches.empty();
  for (oracle::Mismatch &m : mismatches)
    report.diagnostics.push_back(
        Diagnostic{"oracle-mismatch", std::move(m.what), std::move(m.witness)});
  return report;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::UnknownName:
      return 2;
    default:
      return 3;
  }
}

int exit_code_for(const Report &report) {
  if (report.verdict && !*report.verdict) return 1;
  return 0;
}

std::vector<std::string> split_csv(const std::string &text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t first = item.find_first_not_of(" \t");
    std::size_t last = item.find_last_not_of(" \t");
    if (first == std::string::npos)
      fail(ErrorKind::InvalidArgument,
           "empty item in comma-separated list: '" + text + "'");
    out.push_back(item.substr(first, last - first + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace hrc
