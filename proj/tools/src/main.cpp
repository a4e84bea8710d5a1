#include <iostream>
#include <string>
#include <vector>

#include "cube_spectra/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cube::cli::run(args, std::cout, std::cerr);
}
