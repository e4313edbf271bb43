#include "maxmin/io/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return maxmin::io::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
