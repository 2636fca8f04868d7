/* C interface to the contract-algebra engine.
 *
 * Usage pattern: load a spec, run commands against it, read the resulting
 * reports, free both.  All functions are thread-safe as long as each
 * hrc_spec / hrc_report object is used from one thread at a time; the
 * error string is thread-local.
 */
#ifndef HRC_H
#define HRC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* A parsed and elaborated specification. */
typedef struct hrc_spec hrc_spec;
/* The outcome of one command: verdict, optional contract, diagnostics. */
typedef struct hrc_report hrc_report;

/* Status values double as process exit codes: 0 success, 2 usage error
 * (bad arguments, unknown names), 3 semantic error (parse, type, universe
 * cap, or algebra errors).  Verdict false is NOT a status: a command that
 * runs to completion returns HRC_OK and the verdict lives on the report. */
typedef enum hrc_status {
  HRC_OK = 0,
  HRC_USAGE_ERROR = 2,
  HRC_SEMANTIC_ERROR = 3
} hrc_status;

/* Library version, "major.minor.patch". */
const char *hrc_version(void);

/* Message of the last failure on this thread, or "" if none. */
const char *hrc_last_error(void);

/* max_universe = 0 selects the default cap (2^24 runs). */
hrc_status hrc_spec_load_text(const char *text, uint64_t max_universe,
                              hrc_spec **out);
hrc_status hrc_spec_load_file(const char *path, uint64_t max_universe,
                              hrc_spec **out);
void hrc_spec_free(hrc_spec *spec);

/* Commands.  Name arguments refer to definitions inside the spec; *_csv
 * arguments are comma-separated lists ("" or NULL for the empty list where
 * a list may be empty).  On success *out receives a report the caller must
 * free with hrc_report_free. */
hrc_status hrc_check_sat(const hrc_spec *spec, const char *impl,
                         const char *contract, hrc_report **out);
hrc_status hrc_check_dom(const hrc_spec *spec, const char *left,
                         const char *right, hrc_report **out);
hrc_status hrc_op_meet(const hrc_spec *spec, const char *left,
                       const char *right, hrc_report **out);
hrc_status hrc_op_join(const hrc_spec *spec, const char *left,
                       const char *right, hrc_report **out);
hrc_status hrc_op_compose(const hrc_spec *spec, const char *left,
                          const char *right, hrc_report **out);
hrc_status hrc_op_eliminate(const hrc_spec *spec, const char *contract,
                            const char *ports_csv, hrc_report **out);
hrc_status hrc_op_fuse(const hrc_spec *spec, const char *contracts_csv,
                       const char *ports_csv, hrc_report **out);
hrc_status hrc_check_consistent(const hrc_spec *spec, const char *contract,
                                hrc_report **out);
hrc_status hrc_check_compatible(const hrc_spec *spec, const char *contract,
                                hrc_report **out);
hrc_status hrc_check_compat_pair(const hrc_spec *spec, const char *left,
                                 const char *right, hrc_report **out);
hrc_status hrc_check_component(const hrc_spec *spec, const char *name,
                               hrc_report **out);
hrc_status hrc_check_system(const hrc_spec *spec, const char *names_csv,
                            hrc_report **out);
hrc_status hrc_canonicalize(const hrc_spec *spec, const char *contract,
                            hrc_report **out);
hrc_status hrc_oracle_verify(const hrc_spec *spec, hrc_report **out);

/* 1 when the command carries a pass/fail verdict (check commands). */
int hrc_report_has_verdict(const hrc_report *report);
/* The verdict (0/1); 0 when there is none. */
int hrc_report_verdict(const hrc_report *report);
/* Exit code implied by the verdict: 1 for a false verdict, else 0. */
int hrc_report_exit_code(const hrc_report *report);
/* Renderings, owned by the report; valid until hrc_report_free. */
const char *hrc_report_text(hrc_report *report);
const char *hrc_report_json(hrc_report *report);
void hrc_report_free(hrc_report *report);

#ifdef __cplusplus
}
#endif

#endif /* HRC_H */
