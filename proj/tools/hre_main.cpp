#include <unistd.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "hre/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hre::cli::run(args, std::cout, std::cerr, isatty(fileno(stderr)) != 0);
}
