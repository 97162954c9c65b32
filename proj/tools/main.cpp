#include <iostream>
#include <string>
#include <vector>

#include "goppa/cli.hpp"

int main(int argc, char** argv) {
  return goppa::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
