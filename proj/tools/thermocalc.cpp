#include <iostream>
#include <string>
#include <vector>

#include "thermocalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = thermocalc::cli::run_args(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.status;
}
