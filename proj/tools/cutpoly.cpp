#include <iostream>
#include <string>
#include <vector>

#include "cutpoly/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cutpoly::run_cli(args, std::cout, std::cerr);
}
