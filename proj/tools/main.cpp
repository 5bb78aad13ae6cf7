#include <iostream>
#include <string>
#include <vector>

#include "capa/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return capa::cli::run(args, std::cout, std::cerr);
}
