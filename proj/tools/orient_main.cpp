#include <iostream>

#include "orient/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return orient::run_cli(argc, argv, std::cout, std::cerr);
}
