#include <iostream>
#include <string>
#include <vector>

#include "glover/json_io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return glover::cli_dispatch(args, std::cout, std::cerr, std::cin);
}
