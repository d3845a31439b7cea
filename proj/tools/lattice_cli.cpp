#include <iostream>
#include <string>
#include <vector>

#include "lattice/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lattice::run_cli(args, std::cin, std::cout, std::cerr);
}
