// superlink_main.cpp
// ------------------
// Thin process entry point; all behavior lives in run_command so tests can
// drive the CLI in-process.

#include <superlink/cli.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return superlink::run_command(args, std::cout, std::cerr);
}
