#include <iostream>
#include <string>
#include <vector>

#include "jumpemm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return jumpemm::run_cli(args, std::cout, std::cerr);
}
