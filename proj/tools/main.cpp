#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "ivrank/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bool tty = isatty(fileno(stdout)) != 0;
  return ivrank::run_cli(args, std::cout, std::cerr, tty);
}
