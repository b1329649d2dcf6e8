#include <iostream>
#include <vector>

#include "hrq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hrq::cli::run_cli(args, std::cout, std::cerr);
}
