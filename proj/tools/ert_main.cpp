#include <string>
#include <vector>

#include "ert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ert::run_cli(args);
}
