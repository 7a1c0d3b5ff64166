#include <iostream>
#include <string>
#include <vector>

#include "su21/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return su21::cli::run(args, std::cout, std::cerr);
}
