#include <iostream>
#include <string>
#include <vector>

#include "knotproj/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return knotproj::run(args, std::cout, std::cerr);
}
