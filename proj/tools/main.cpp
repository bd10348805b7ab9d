#include <iostream>

#include "skewalg/cli.hpp"

int main(int argc, char** argv) {
  return skewalg::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
