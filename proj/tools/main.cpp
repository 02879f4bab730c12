#include <iostream>

#include "qparity/cli.hpp"

int main(int argc, char** argv) {
  return qparity::cli::run(argc, argv, std::cout, std::cerr);
}
