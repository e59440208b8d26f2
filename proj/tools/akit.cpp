#include <iostream>
#include <string>
#include <vector>

#include "akit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return akit::cli::run(args, std::cout, std::cerr);
}
