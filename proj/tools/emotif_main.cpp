#include <iostream>

#include "emotif/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return emotif::run_cli(args, std::cout, std::cerr);
}
