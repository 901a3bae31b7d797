#include <iostream>
#include <string>
#include <vector>

#include "hankel_lab/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return hankel_lab::cli::run_cli(args, hankel_lab::default_registry(), std::cout, std::cerr);
}
