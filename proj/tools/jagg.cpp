#include <iostream>

#include "jagg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jagg::run(args, std::cout, std::cerr);
}
