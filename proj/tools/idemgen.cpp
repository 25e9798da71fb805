#include <iostream>
#include <string>
#include <vector>

#include "idemgen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto const               result = idemgen::run(args);
  (result.exit_code == 1 ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
