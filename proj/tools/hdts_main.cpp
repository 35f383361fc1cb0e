#include <iostream>
#include <string>
#include <vector>

#include "hdts/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hdts::run(args, std::cout, std::cerr);
}
