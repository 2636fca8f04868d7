#ifndef HRC_REPORT_HPP
#define HRC_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hrc/component.hpp"
#include "hrc/contract.hpp"

namespace hrc {

// What a CLI command reports: an optional verdict (check commands), an
// optional result contract (operator and check-component commands), and
// diagnostics.  Text and JSON renderings carry the same verdict and are
// byte-deterministic for identical inputs.
struct Report {
  std::string command;
  std::optional<bool> verdict;
  std::optional<Contract> contract;
  std::vector<Diagnostic> diagnostics;
};

std::string report_text(const Report &report);
nlohmann::ordered_json report_json(const Report &report);

}  // namespace hrc

#endif  // HRC_REPORT_HPP
