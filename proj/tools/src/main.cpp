#include <iostream>

#include "balforest/tools/commands.hpp"

int main(int argc, char** argv) {
  return balforest::tools::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
