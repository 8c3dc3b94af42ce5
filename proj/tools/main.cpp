#include <iostream>

#include "ptrace/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ptrace::cli::run(args, std::cout, std::cerr);
}
