#include <iostream>

#include "rgl_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rgl::cli::run(args, std::cin, std::cout, std::cerr);
}
