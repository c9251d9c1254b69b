#include <iostream>

#include "illoc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return illoc::cli::run(args, std::cout, std::cerr);
}
