#ifndef HRC_COMMANDS_HPP
#define HRC_COMMANDS_HPP

#include <string>
#include <vector>

#include "hrc/error.hpp"
#include "hrc/report.hpp"
#include "hrc/spec.hpp"

namespace hrc {

// A parsed document together with its elaborated model; the unit every
// command operates on.
struct LoadedSpec {
  SpecDocument doc;
  Model model;
};

LoadedSpec load_spec_text(const std::string &text,
                          std::uint64_t max_universe = kDefaultUniverseCap);
LoadedSpec load_spec_file(const std::string &path,
                          std::uint64_t max_universe = kDefaultUniverseCap);

// One function per CLI command.  Name arguments refer to definitions in the
// spec; unknown names raise ErrorKind::UnknownName.  Comma-separated lists
// are passed already split.
Report cmd_check_sat(const LoadedSpec &spec, const std::string &impl,
                     const std::string &contract);
Report cmd_check_dom(const LoadedSpec &spec, const std::string &left,
                     const std::string &right);
Report cmd_op_meet(const LoadedSpec &spec, const std::string &left,
                   const std::string &right);
Report cmd_op_join(const LoadedSpec &spec, const std::string &left,
                   const std::string &right);
Report cmd_op_compose(const LoadedSpec &spec, const std::string &left,
                      const std::string &right);
Report cmd_op_eliminate(const LoadedSpec &spec, const std::string &contract,
                        const std::vector<std::string> &ports);
Report cmd_op_fuse(const LoadedSpec &spec,
                   const std::vector<std::string> &contracts,
                   const std::vector<std::string> &ports);
Report cmd_check_consistent(const LoadedSpec &spec,
                            const std::string &contract);
Report cmd_check_compatible(const LoadedSpec &spec,
                            const std::string &contract);
Report cmd_check_compat_pair(const LoadedSpec &spec, const std::string &left,
                             const std::string &right);
Report cmd_check_component(const LoadedSpec &spec, const std::string &name);
Report cmd_check_system(const LoadedSpec &spec,
                        const std::vector<std::string> &names);
Report cmd_canonicalize(const LoadedSpec &spec, const std::string &contract);
Report cmd_oracle_verify(const LoadedSpec &spec);

// Exit-code policy: 0 pass/true, 1 fail/false, 2 usage (bad invocation or
// unknown name), 3 semantic (parse, type, cap, or algebra errors).
int exit_code_for(ErrorKind kind);
int exit_code_for(const Report &report);

// Split a comma-separated list, trimming surrounding blanks; empty items
// are invalid-argument errors.
std::vector<std::string> split_csv(const std::string &text);

}  // namespace hrc

#endif  // HRC_COMMANDS_HPP
