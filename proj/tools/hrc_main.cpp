// Command-line front end: parses arguments, forwards to the C API, prints
// one report to stdout.  Exit codes: 0 pass/true, 1 fail/false, 2 usage
// error, 3 semantic error.
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "hrc/hrc.h"

namespace {

struct Options {
  std::string spec_path;
  std::string impl;
  std::string contract;
  std::string left;
  std::string right;
  std::string ports;
  std::string contracts;
  std::string name;
  std::string names;
  std::string format = "text";
  std::uint64_t max_universe = 0;  // 0 = library default
  std::uint64_t seed = 0;          // reserved for randomized suites
};

using Runner = std::function<hrc_status(const hrc_spec *, hrc_report **)>;

void add_spec_argument(CLI::App *cmd, Options &opt) {
  cmd->add_option("spec", opt.spec_path, "specification file (.hrc)")
      ->required();
}

}  // namespace

int main(int argc, char **argv) {
  Options opt;
  Runner run;

  CLI::App app{"assume/guarantee contract algebra for rich components"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-universe", opt.max_universe,
                 "largest admissible number of runs (0 = default)");
  app.add_option("--seed", opt.seed,
                 "random seed (randomized property suites only)");

  CLI::App *check = app.add_subcommand("check", "decision procedures");
  check->require_subcommand(1);
  check->fallthrough();

  CLI::App *sat = check->add_subcommand(
      "sat", "does a named assertion satisfy a contract");
  add_spec_argument(sat, opt);
  sat->add_option("--impl", opt.impl, "implementation (named assertion)")
      ->required();
  sat->add_option("--contract", opt.contract, "contract name")->required();
  sat->callback([&] {
    run = [&](const hrc_spec *s, hrc_report **r) {
      return hrc_check_sat(s, opt.impl.c_str(), opt.contract.c_str(), r);
    };
  });

  CLI::App *dom =
      check->add_subcommand("dom", "does the left contract dominate the right");
  add_spec_argument(dom, opt);
  dom->add_option("--left", opt.left, "contract name")->required();
  dom->add_option("--right", opt.right, "contract name")->required();
  dom->callback([&] {
    run = [&](const hrc_spec *s, hrc_report **r) {
      return hrc_check_dom(s, opt.left.c_str(), opt.right.c_str(), r);
    };
  });

  CLI::App *consistent = check->add_subcommand(
      "consistent", "is the promise receptive to uncontrolled ports");
  add_spec_argument(consistent, opt);
  consistent->add_option("--contract", opt.contract, "contract name")
      ->required();
  consistent->callback([&] {
    run = [&](const hrc_spec *s, hrc_report **r) {
      return hrc_check_consistent(s, opt.contract.c_str(), r);
    };
  });

  CLI::App *compatible = check->add_subcommand(
      "compatible", "is the assumption receptive to controlled ports");
  add_spec_argument(compatible, opt);
  compatible->add_option("--contract", opt.contract, "contract name")
      ->required();
  compatible->callback([&] {
    run = [&](const hrc_spec *s, hrc_report **r) {
      return hrc_check_compatible(s, opt.contract.c_str(), r);
    };
  });

  CLI::App *compat_pair = check->add_subcommand(
      "compat-pair", "is the composition of two contracts compatible");
  add_spec_argument(compat_pair, opt);
  compat_pair->add_option("--left", opt.left, "contract name")->required();
  compat_pair->add_option("--right", opt.right, "contract name")->required();
  compat_pair->callback([&] {
    run = [&](const hrc_spec *s, hrc_report **r) {
      return hrc_check_compat_pair(s, opt.left.c_str(), opt.right.c_str(), r);
    };
  });

  CLI::App *component = check->add_subcommand(
      "component", "fuse a component's contracts and judge its implementation");
  add_spec_argument(component, opt);
  component->add_option("--name", opt.name, "component name")->required();
  component->callback([&] {
    run = [&](const hrc_spec *s, hrc_report **r) {
      return hrc_check_component(s, opt.name.c_str(), r);
    };
  });

  CLI::App *system = check->add_subcommand(
      "system", "compose fused components and check final compatibility");
  add_spec_argument(system, opt);
  system->add_option("--names", opt.names, "component names, comma-separated")
      ->required();
  system->callback([&] {
    run = [&](const hrc_spec *s, hrc_report **r) {
      return hrc_check_system(s, opt.names.c_str(), r);
    };
  });

  CLI::App *op = app.add_subcommand("op", "contract operators");
  op->require_subcommand(1);
  op->fallthrough();

  auto binary_op = [&](const char *name, const char *help, auto fn) {
    CLI::App *cmd = op->add_subcommand(name, help);
    add_spec_argument(cmd, opt);
    cmd->add_option("--left", opt.left, "contract name")->required();
    cmd->add_option("--right", opt.right, "contract name")->required();
    cmd->callback([&, fn] {
      run = [&, fn](const hrc_spec *s, hrc_report **r) {
        return fn(s, opt.left.c_str(), opt.right.c_str(), r);
      };
    });
  };
  binary_op("meet", "greatest lower bound", hrc_op_meet);
  binary_op("join", "least upper bound", hrc_op_join);
  binary_op("compose", "parallel composition", hrc_op_compose);

  CLI::App *eliminate =
      op->add_subcommand("eliminate", "hide ports from a contract");
  add_spec_argument(eliminate, opt);
  eliminate->add_option("--contract", opt.contract, "contract name")
      ->required();
  eliminate->add_option("--ports", opt.ports, "ports to hide, comma-separated");
  eliminate->callback([&] {
    run = [&](const hrc_spec *s, hrc_report **r) {
      return hrc_op_eliminate(s, opt.contract.c_str(), opt.ports.c_str(), r);
    };
  });

  CLI::App *fuse_cmd =
      op->add_subcommand("fuse", "fuse contracts over shared ports");
  add_spec_argument(fuse_cmd, opt);
  fuse_cmd
      ->add_option("--contracts", opt.contracts,
                   "contract names, comma-separated")
      ->required();
  fuse_cmd->add_option("--ports", opt.ports,
                       "ports to eliminate, comma-separated");
  fuse_cmd->callback([&] {
    run = [&](const hrc_spec *s, hrc_report **r) {
      return hrc_op_fuse(s, opt.contracts.c_str(), opt.ports.c_str(), r);
    };
  });

  CLI::App *canonicalize = app.add_subcommand(
      "canonicalize", "print the canonical form of a contract");
  add_spec_argument(canonicalize, opt);
  canonicalize->add_option("--contract", opt.contract, "contract name")
      ->required();
  canonicalize->callback([&] {
    run = [&](const hrc_spec *s, hrc_report **r) {
      return hrc_canonicalize(s, opt.contract.c_str(), r);
    };
  });

  CLI::App *oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  CLI::App *verify = oracle->add_subcommand(
      "verify", "recompute every operator result by enumeration and diff");
  add_spec_argument(verify, opt);
  verify->callback([&] {
    run = [&](const hrc_spec *s, hrc_report **r) {
      return hrc_oracle_verify(s, r);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  hrc_spec *spec = nullptr;
  hrc_status status =
      hrc_spec_load_file(opt.spec_path.c_str(), opt.max_universe, &spec);
  if (status != HRC_OK) {
    std::fprintf(stderr, "error: %s\n", hrc_last_error());
    return static_cast<int>(status);
  }

  hrc_report *report = nullptr;
  status = run(spec, &report);
  if (status != HRC_OK) {
    std::fprintf(stderr, "error: %s\n", hrc_last_error());
    hrc_spec_free(spec);
    return static_cast<int>(status);
  }

  const char *rendering = opt.format == "json" ? hrc_report_json(report)
                                               : hrc_report_text(report);
  std::fputs(rendering, stdout);

  int exit_code = hrc_report_exit_code(report);
  hrc_report_free(report);
  hrc_spec_free(spec);
  return exit_code;
}
