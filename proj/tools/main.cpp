#include <iostream>
#include <string>
#include <vector>

#include "cliio/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return thermaljc::cli::run(args, std::cout, std::cerr);
}
