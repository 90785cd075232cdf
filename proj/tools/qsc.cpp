#include <cstdlib>
#include <iostream>

#include "qsc/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env;
  if (const char* f = std::getenv("QSC_FORMAT")) env = f;
  const auto outcome = qsc::cli::main_entry(args, env);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
