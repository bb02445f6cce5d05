#include <iostream>
#include <string>
#include <vector>

#include "hodgeheat/cli_impl.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hodgeheat::run_cli(args, std::cin, std::cout, std::cerr);
}
