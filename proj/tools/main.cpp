#include <iostream>

#include "catalan/cli/app.hpp"

int main(int argc, char** argv) {
  return catalan::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
