#include <iostream>
#include <string>
#include <vector>

#include "ybe/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ybe::run_cli(args, std::cout, std::cerr);
}
