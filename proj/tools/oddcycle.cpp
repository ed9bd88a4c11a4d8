#include <iostream>

#include "oddcycle/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return oddcycle::run_cli(args, std::cout, std::cerr);
}
