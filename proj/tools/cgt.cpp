#include <iostream>

#include "cgt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cgt::cli::run(args, std::cout, std::cerr);
}
