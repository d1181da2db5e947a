#include <iostream>
#include <string>
#include <vector>

#include "fracpolya/cli.hpp"

int main(int argc, char** argv) {
  return fracpolya::cli::run(std::vector<std::string>(argv, argv + argc),
                             std::cout, std::cerr);
}
