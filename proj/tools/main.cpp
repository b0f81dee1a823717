#include <iostream>
#include <string>
#include <vector>

#include "superdirac/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return superdirac::run_cli(args, std::cout, std::cerr);
}
