#ifndef HRC_PRINTER_HPP
#define HRC_PRINTER_HPP

#include <string>

#include <json.hpp>

#include "hrc/assertion.hpp"

namespace hrc {

// Minimized sum-of-products formula denoting the assertion: maximal cubes
// grown from uncovered members in codec order, then an irredundancy pass.
// Degenerate cases print as "false" / "true".  Atoms are spelled `a` / `!a`
// for boolean ports and `s == v` for enumerated ones, with a `[step]`
// suffix when the trace length exceeds 1.
std::string assertion_formula(const Assertion &assertion);

// "<formula> (<N> runs)" — the one-line report form.
std::string format_assertion(const Assertion &assertion);

// A run as a JSON object mapping port name (alphabetical) to the array of
// its per-step values; boolean values as JSON booleans, others as strings.
nlohmann::ordered_json run_json(const Run &run);

// All member runs, ascending in codec order.
nlohmann::ordered_json runs_json(const Assertion &assertion);

// "{a=false, b=true}" (alphabetical); sequences bracketed when L > 1.
std::string run_text(const Run &run);

}  // namespace hrc

#endif  // HRC_PRINTER_HPP
