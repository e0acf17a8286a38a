#include <iostream>
#include <string>
#include <vector>

#include "bruhat/harness.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bruhat::run_cli(args, std::cout, std::cerr);
}
