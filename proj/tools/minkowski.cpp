#include <iostream>
#include <string>
#include <vector>

#include "minkowski/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return minkowski::cli::run(args, std::cout, std::cerr);
}
