#include <iostream>

#include "cdm/cli.hpp"

int main(int argc, char** argv) {
  return cdm::run_cli(argc, argv, std::cout, std::cerr);
}
