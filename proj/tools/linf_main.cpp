#include <iostream>
#include <string>
#include <vector>

#include "linf/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return linf::cli::run_cli(args, std::cout, std::cerr);
}
