#include <iostream>
#include <string>
#include <vector>

#include "lieamk/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const lieamk::cli::RunResult r = lieamk::cli::run(args);
  if (r.json_requested)
    std::cout << r.report.dump(2) << "\n";
  else
    std::cout << r.text;
  return r.code;
}
