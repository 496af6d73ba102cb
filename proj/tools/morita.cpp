#include <iostream>
#include <string>
#include <vector>

#include "morita/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return morita::cli::run(args, std::cout, std::cerr);
}
