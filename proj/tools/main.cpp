#include <iostream>

#include "f5c/cli.hpp"

int main(int argc, char** argv) {
  return f5c::cli::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                               std::cerr);
}
