#include <iostream>

#include "lpa/cli.hpp"

int main(int argc, char** argv) {
  return lpa::cli::run(argc, argv, std::cout, std::cerr);
}
