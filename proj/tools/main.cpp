#include <iostream>
#include <string>
#include <vector>

#include "kauffman/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kauffman::cli::run(std::move(args), std::cout, std::cerr);
}
