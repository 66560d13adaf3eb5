// cli.hpp
// -------
// Command-line driver: verb dispatch, the JSON link format, canonical output
// formatting, and exit-code mapping.  Kept as a library function so tests can
// drive the full surface without spawning processes.

#pragma once

#include <superlink/tangle.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace superlink {

// A colored braid read from the JSON link format together with the symbol
// table holding the display names of its color parameters:
//   {"strands": 2, "word": ["s1", "s1"],
//    "colors": {"1": {"family": "sl", "m": 2, "n": 1, "c": [0], "param": "a"},
//               "2": {... "param": "7/2"}}}
// A numeric "param" makes the color numeric; "odd": true selects the
// parity-shifted module.
struct ParsedLink {
  ColoredBraid braid;
  SymbolTable table;
};

// Errors: Errc::syntax_error (malformed JSON or word), Errc::invalid_spec
// (unknown family), plus everything make_braid validates.
ParsedLink parse_link_json(const std::string& text);

std::string format_invariant_json(const InvariantResult& result, const SymbolTable& table);

enum class OutputStyle { text, json };

// Canonical rendering; `json` wraps the canonical string in a JSON literal.
std::string format_polynomial(const LaurentElement& x, OutputStyle style,
                              const SymbolTable& table = SymbolTable::defaults());

// Exit-code grouping: 0 success; 1 usage or input errors; 2 atypical-color
// errors; 3 internal consistency failures (non-scalar brackets, ring or
// division failures, construction bugs).
int exit_code_for(Errc code);

// Dispatches one command line (without the program name); writes results to
// `out`, diagnostics to `err`, and returns the process exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superlink
