#include <iostream>
#include <string>
#include <vector>

#include "eulersym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eulersym::run_cli(args, std::cout, std::cerr);
}
