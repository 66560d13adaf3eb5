// acceptance_main.cpp
// -------------------
// Runs the thirteen-criterion acceptance suite and reports one line per
// criterion; exits nonzero if any criterion fails.

#include <superlink/selfcheck.hpp>

#include <iostream>

int main() { return superlink::run_selfcheck(std::cout) == 0 ? 0 : 1; }
