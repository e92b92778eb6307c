#include <iostream>
#include <string>
#include <vector>

#include "template_chroma/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = template_chroma::cli::run(args);
  std::cout << result.out;
  return result.exit_code;
}
