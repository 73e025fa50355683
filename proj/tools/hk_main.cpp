#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> field;
  if (const char* env = std::getenv("HK_FIELD")) field = env;
  return hk::cli::run(args, std::cin, std::cout, std::cerr, field);
}
