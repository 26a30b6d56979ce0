#include <iostream>
#include <string>
#include <vector>

#include "gsnn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gsnn::run_cli(args, std::cout, std::cerr);
}
