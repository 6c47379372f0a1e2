#include <iostream>
#include <vector>

#include "linkpoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return linkpoly::run_cli(args, std::cout, std::cerr);
}
