#include <iostream>
#include <string>
#include <vector>

#include "condind/dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  condind::RunResult r = condind::dispatch(args);
  (r.exit_code == condind::kExitOk || r.exit_code == condind::kExitCounterexample ? std::cout : std::cerr) << r.output;
  return r.exit_code;
}
