#include <iostream>

#include "coordsolve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coordsolve::run(args, std::cout, std::cerr);
}
