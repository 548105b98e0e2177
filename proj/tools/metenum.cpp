#include <iostream>
#include <string>
#include <vector>

#include "metenum/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return metenum::run_command(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
