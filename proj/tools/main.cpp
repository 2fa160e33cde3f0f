#include <iostream>

#include "relaysec/cli.hpp"

int main(int argc, char** argv) {
  return relaysec::run_cli(argc, argv, std::cout, std::cerr);
}
