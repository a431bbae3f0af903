#include <iostream>
#include <vector>

#include "cycloid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cycloid::cli::run(args, std::cout, std::cerr);
}
