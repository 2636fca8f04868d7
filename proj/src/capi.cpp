#include "hrc/hrc.h"

#include <exception>
#include <string>
#include <utility>

#include "hrc/commands.hpp"
#include "hrc/report.hpp"

struct hrc_spec {
  hrc::LoadedSpec spec;
};

struct hrc_report {
  hrc::Report report;
  std::string text_cache;
  std::string json_cache;
};

namespace {

thread_local std::string g_last_error;

hrc_status status_of(const hrc::Error &e) {
  return hrc::exit_code_for(e.kind()) == 2 ? HRC_USAGE_ERROR
                                           : HRC_SEMANTIC_ERROR;
}

// Run a command body, translating exceptions into statuses + last-error.
template <typename Fn>
hrc_status guarded(Fn &&fn) {
  try {
    g_last_error.clear();
    fn();
    return HRC_OK;
  } catch (const hrc::Error &e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return HRC_SEMANTIC_ERROR;
  }
}

hrc_status require(bool ok, const char *message) {
  if (ok) return HRC_OK;
  g_last_error = message;
  return HRC_USAGE_ERROR;
}

std::vector<std::string> csv_list(const char *csv) {
  if (csv == nullptr || *csv == '\0') return {};
  return hrc::split_csv(csv);
}

hrc_status deliver(hrc::Report report, hrc_report **out) {
  *out = new hrc_report{std::move(report), {}, {}};
  return HRC_OK;
}

// Shared argument validation for the command wrappers.
bool args_ok(const hrc_spec *spec, hrc_report **out) {
  return spec != nullptr && out != nullptr;
}

}  // namespace

extern "C" {

const char *hrc_version(void) { return "1.0.0"; }

const char *hrc_last_error(void) { return g_last_error.c_str(); }

hrc_status hrc_spec_load_text(const char *text, uint64_t max_universe,
                              hrc_spec **out) {
  if (hrc_status s = require(text && out, "null argument"); s != HRC_OK)
    return s;
  return guarded([&] {
    uint64_t cap = max_universe ? max_universe : hrc::kDefaultUniverseCap;
    *out = new hrc_spec{hrc::load_spec_text(text, cap)};
  });
}

hrc_status hrc_spec_load_file(const char *path, uint64_t max_universe,
                              hrc_spec **out) {
  if (hrc_status s = require(path && out, "null argument"); s != HRC_OK)
    return s;
  return guarded([&] {
    uint64_t cap = max_universe ? max_universe : hrc::kDefaultUniverseCap;
    *out = new hrc_spec{hrc::load_spec_file(path, cap)};
  });
}

void hrc_spec_free(hrc_spec *spec) { delete spec; }

hrc_status hrc_check_sat(const hrc_spec *spec, const char *impl,
                         const char *contract, hrc_report **out) {
  if (hrc_status s = require(args_ok(spec, out) && impl && contract,
                             "null argument");
      s != HRC_OK)
    return s;
  return guarded([&] {
    deliver(hrc::cmd_check_sat(spec->spec, impl, contract), out);
  });
}

hrc_status hrc_check_dom(const hrc_spec *spec, const char *left,
                         const char *right, hrc_report **out) {
  if (hrc_status s =
          require(args_ok(spec, out) && left && right, "null argument");
      s != HRC_OK)
    return s;
  return guarded([&] {
    deliver(hrc::cmd_check_dom(spec->spec, left, right), out);
  });
}

hrc_status hrc_op_meet(const hrc_spec *spec, const char *left,
                       const char *right, hrc_report **out) {
  if (hrc_status s =
          require(args_ok(spec, out) && left && right, "null argument");
      s != HRC_OK)
    return s;
  return guarded(
      [&] { deliver(hrc::cmd_op_meet(spec->spec, left, right), out); });
}

hrc_status hrc_op_join(const hrc_spec *spec, const char *left,
                       const char *right, hrc_report **out) {
  if (hrc_status s =
          require(args_ok(spec, out) && left && right, "null argument");
      s != HRC_OK)
    return s;
  return guarded(
      [&] { deliver(hrc::cmd_op_join(spec->spec, left, right), out); });
}

hrc_status hrc_op_compose(const hrc_spec *spec, const char *left,
                          const char *right, hrc_report **out) {
  if (hrc_status s =
          require(args_ok(spec, out) && left && right, "null argument");
      s != HRC_OK)
    return s;
  return guarded(
      [&] { deliver(hrc::cmd_op_compose(spec->spec, left, right), out); });
}

hrc_status hrc_op_eliminate(const hrc_spec *spec, const char *contract,
                            const char *ports_csv, hrc_report **out) {
  if (hrc_status s =
          require(args_ok(spec, out) && contract, "null argument");
      s != HRC_OK)
    return s;
  return guarded([&] {
    deliver(hrc::cmd_op_eliminate(spec->spec, contract, csv_list(ports_csv)),
            out);
  });
}

hrc_status hrc_op_fuse(const hrc_spec *spec, const char *contracts_csv,
                       const char *ports_csv, hrc_report **out) {
  if (hrc_status s =
          require(args_ok(spec, out) && contracts_csv, "null argument");
      s != HRC_OK)
    return s;
  return guarded([&] {
    deliver(hrc::cmd_op_fuse(spec->spec, csv_list(contracts_csv),
                             csv_list(ports_csv)),
            out);
  });
}

hrc_status hrc_check_consistent(const hrc_spec *spec, const char *contract,
                                hrc_report **out) {
  if (hrc_status s =
          require(args_ok(spec, out) && contract, "null argument");
      s != HRC_OK)
    return s;
  return guarded([&] {
    deliver(hrc::cmd_check_consistent(spec->spec, contract), out);
  });
}

hrc_status hrc_check_compatible(const hrc_spec *spec, const char *contract,
                                hrc_report **out) {
  if (hrc_status s =
          require(args_ok(spec, out) && contract, "null argument");
      s != HRC_OK)
    return s;
  return guarded([&] {
    deliver(hrc::cmd_check_compatible(spec->spec, contract), out);
  });
}

hrc_status hrc_check_compat_pair(const hrc_spec *spec, const char *left,
                                 const char *right, hrc_report **out) {
  if (hrc_status s =
          require(args_ok(spec, out) && left && right, "null argument");
      s != HRC_OK)
    return s;
  return guarded([&] {
    deliver(hrc::cmd_check_compat_pair(spec->spec, left, right), out);
  });
}

hrc_status hrc_check_component(const hrc_spec *spec, const char *name,
                               hrc_report **out) {
  if (hrc_status s = require(args_ok(spec, out) && name, "null argument");
      s != HRC_OK)
    return s;
  return guarded([&] {
    deliver(hrc::cmd_check_component(spec->spec, name), out);
  });
}

hrc_status hrc_check_system(const hrc_spec *spec, const char *names_csv,
                            hrc_report **out) {
  if (hrc_status s =
          require(args_ok(spec, out) && names_csv, "null argument");
      s != HRC_OK)
    return s;
  return guarded([&] {
    deliver(hrc::cmd_check_system(spec->spec, csv_list(names_csv)), out);
  });
}

hrc_status hrc_canonicalize(const hrc_spec *spec, const char *contract,
                            hrc_report **out) {
  if (hrc_status s =
          require(args_ok(spec, out) && contract, "null argument");
      s != HRC_OK)
    return s;
  return guarded([&] {
    deliver(hrc::cmd_canonicalize(spec->spec, contract), out);
  });
}

hrc_status hrc_oracle_verify(const hrc_spec *spec, hrc_report **out) {
  if (hrc_status s = require(args_ok(spec, out), "null argument");
      s != HRC_OK)
    return s;
  return guarded([&] { deliver(hrc::cmd_oracle_verify(spec->spec), out); });
}

int hrc_report_has_verdict(const hrc_report *report) {
  return report && report->report.verdict.has_value() ? 1 : 0;
}

int hrc_report_verdict(const hrc_report *report) {
  return report && report->report.verdict.value_or(false) ? 1 : 0;
}

int hrc_report_exit_code(const hrc_report *report) {
  return report ? hrc::exit_code_for(report->report) : 2;
}

const char *hrc_report_text(hrc_report *report) {
  if (!report) return "";
  if (report->text_cache.empty())
    report->text_cache = hrc::report_text(report->report);
  return report->text_cache.c_str();
}

const char *hrc_report_json(hrc_report *report) {
  if (!report) return "";
  if (report->json_cache.empty())
    report->json_cache = hrc::report_json(report->report).dump(2) + "\n";
  return report->json_cache.c_str();
}

void hrc_report_free(hrc_report *report) { delete report; }

}  // extern "C"
