#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto o = aksw::cli::run(args);
  std::cout << o.out;
  std::cerr << o.err;
  return o.exit_code;
}
