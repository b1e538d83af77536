#include <iostream>
#include <string>
#include <vector>

#include "polysect/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polysect::run_cli(args, std::cout, std::cerr);
}
