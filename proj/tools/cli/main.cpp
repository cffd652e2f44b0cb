#include <iostream>

#include "weilcensus/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return weilcensus::cli::run(args, std::cout, std::cerr);
}
