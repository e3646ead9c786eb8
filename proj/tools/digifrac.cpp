#include <iostream>
#include <string>
#include <vector>

#include "digifrac/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return digifrac::cli::run(args, std::cout, std::cerr);
}
