#include <iostream>
#include <string>
#include <vector>

#include "orbirr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return orbirr::cli::run(args, std::cout, std::cerr);
}
