#include <iostream>
#include <string>
#include <vector>

#include "hyperpath/cli/commands.hpp"

int main(int argc, char** argv) {
  return hyperpath::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
