#include <string>
#include <vector>

#include "antiramsey/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return antiramsey::cli::run(args);
}
