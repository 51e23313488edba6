#include <iostream>
#include <vector>

#include "gforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gforge::cli::run(args, std::cout, std::cerr);
}
