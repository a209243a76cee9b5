#include <iostream>
#include <string>
#include <vector>

#include "e6char/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return e6char::cli::run(args, std::cout, std::cerr);
}
