#include <iostream>
#include <string>
#include <vector>

#include "udt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return udt::cli::dispatch(args, std::cout, std::cerr);
}
