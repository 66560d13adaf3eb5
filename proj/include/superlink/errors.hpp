// errors.hpp
// ----------
// Typed error conditions shared by every layer of the library.  Each failure
// mode the callers are expected to distinguish gets its own enumerator, so the
// CLI can map conditions onto exit codes and tests can assert on the precise
// condition instead of matching message text.

#pragma once

#include <stdexcept>
#include <string>

namespace superlink {

enum class Errc {
  // input validation
  invalid_spec,          // unsupported (family, m, n) combination
  negative_label,        // highest-weight label with a negative entry
  atypical_label,        // numeric parameter lands on an atypical value
  syntax_error,          // malformed braid word or polynomial text
  index_out_of_range,    // braid generator index outside [1, strands-1]
  color_mismatch,        // strand coloring inconsistent with closure components
  no_typical_color,      // no closure component carries a typical color
  // arithmetic
  not_divisible,         // exact division has no quotient in the ring
  non_integral_exponent, // evaluation hit a q-exponent outside (1/p) * Z
  degenerate_evaluation, // character denominator vanished at a numeric weight
  // construction / internal consistency
  construction_failure,  // module action fails a defining relation
  unsupported_algebra,   // representation engine asked for an unwired algebra
  normalization_failure, // root-vector normalization constant is not 1
  not_scalar,            // fully closed tangle did not evaluate to a scalar
  ring_check_failure,    // normalized invariant escaped its Laurent ring
  internal_error,
};

// Stable identifier used in messages and CLI diagnostics ("not_divisible", ...).
const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

// Throws Error(code, message); the return type lets callers write
// `return raise(...)` in value-returning branches.
[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace superlink
