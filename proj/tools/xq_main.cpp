#include <iostream>
#include <string>
#include <vector>

#include "xq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xq::run(args, std::cout, std::cerr);
}
