#include <iostream>
#include <string>
#include <vector>

#include "gridcurve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gridcurve::run_cli(args, std::cout, std::cerr);
}
