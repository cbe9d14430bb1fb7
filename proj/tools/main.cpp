#include <iostream>
#include <string>
#include <vector>

#include "symtensor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return symtensor::cli::run(args, std::cout, std::cerr);
}
