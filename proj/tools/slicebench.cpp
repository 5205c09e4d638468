#include <iostream>
#include <string>
#include <vector>

#include "slicebench/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return slicebench::run_cli(args, std::cout, std::cerr);
}
