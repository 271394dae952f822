#include <iostream>

#include "hyperlap/cli.hpp"

int main(int argc, char** argv) {
  return hyperlap::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
