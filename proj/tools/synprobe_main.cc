#include <iostream>

#include "synprobe/cli.h"

int main(int argc, char** argv) {
  return synprobe::run_cli(argc, argv, std::cout, std::cerr);
}
