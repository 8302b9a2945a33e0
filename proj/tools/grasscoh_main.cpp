#include <iostream>

#include "grasscoh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grasscoh::run(args, std::cout, std::cerr);
}
