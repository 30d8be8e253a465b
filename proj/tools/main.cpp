#include <iostream>

#include "dispatch.hpp"

int main(int argc, char** argv) {
  return gsp4h::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
