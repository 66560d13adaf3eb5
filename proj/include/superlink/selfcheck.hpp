// selfcheck.hpp
// -------------
// The acceptance suite: one exact, tolerance-zero check per shipped claim,
// printed as a PASS/FAIL line each.

#pragma once

#include <iosfwd>

namespace superlink {

// Runs all acceptance criteria, writing one line per criterion plus a
// summary; returns the number of failed criteria (0 on full success).
int run_selfcheck(std::ostream& out);

}  // namespace superlink
