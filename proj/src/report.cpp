#include "hrc/report.hpp"

#include "hrc/printer.hpp"

namespace hrc {

std::string report_text(const Report &report) {
  std::string out = "command: " + report.command + "\n";
  if (report.verdict)
    out += std::string("verdict: ") + (*report.verdict ? "true" : "false") +
           "\n";
  if (report.contract) {
    out += "contract:\n";
    out += "  assume: " + format_assertion(report.contract->assumption()) +
           "\n";
    out += "  promise: " + format_assertion(report.contract->promise()) + "\n";
  }
  if (!report.diagnostics.empty()) {
    out += "diagnostics:\n";
    for (const Diagnostic &d : report.diagnostics) {
      out += "  [" + d.kind + "] " + d.message;
      if (d.witness) out += " [witness: " + run_text(*d.witness) + "]";
      out += "\n";
    }
  }
  return out;
}

nlohmann::ordered_json report_json(const Report &report) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  out["command"] = report.command;
  out["verdict"] =
      report.verdict ? nlohmann::ordered_json(*report.verdict)
                     : nlohmann::ordered_json(nullptr);
  if (report.contract) {
    nlohmann::ordered_json contract = nlohmann::ordered_json::object();
    contract["assume"] = runs_json(report.contract->assumption());
    contract["promise"] = runs_json(report.contract->promise());
    out["contract"] = std::move(contract);
  } else {
    out["contract"] = nullptr;
  }
  nlohmann::ordered_json diags = nlohmann::ordered_json::array();
  for (const Diagnostic &d : report.diagnostics) {
    nlohmann::ordered_json item = nlohmann::ordered_json::object();
    item["kind"] = d.kind;
    item["message"] = d.message;
    item["witness"] = d.witness ? run_json(*d.witness)
                                : nlohmann::ordered_json(nullptr);
    diags.push_back(std::move(item));
  }
  out["diagnostics"] = std::move(diags);
  return out;
}

}  // namespace hrc
