#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ftloop::cli::main_entry(args, std::cin, std::cout, std::cerr);
}
