#include <iostream>
#include <string>
#include <vector>

#include "k3nodal/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return k3nodal::cli::run(args, std::cout, std::cerr, std::cin);
}
