#include <iostream>

#include "gainflow/cli.hpp"

int main(int argc, char** argv) {
  return gainflow::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
