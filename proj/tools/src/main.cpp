#include <iostream>

#include "segeuler_cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return segeuler::cli::run_cli({argv, argv + argc}, std::cout, std::cerr);
}
