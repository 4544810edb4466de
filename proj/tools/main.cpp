#include <iostream>
#include <string>
#include <vector>

#include "seifert/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return seifert::run(args, std::cout, std::cerr);
}
