#include <iostream>

#include "taxicab/cli.hpp"

int main(int argc, char** argv) {
  return taxicab::run_cli(argc, argv, std::cout, std::cerr);
}
