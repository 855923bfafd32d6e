#include <iostream>
#include <string>
#include <vector>

#include "quivermod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return quivermod::cli::run(args, std::cout, std::cerr);
}
