#include <iostream>

#include "scarflab_cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  return scarflab::cli::run_cli(args, std::cout, std::cerr);
}
