// Integration gate: runs every acceptance check at full scale and prints one
// pass/fail line per check.

#include <cstring>
#include <iostream>

#include "lgl/verify.hpp"

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  const int failures = lgl::verify::run_acceptance(quick, std::cout);
  return failures == 0 ? 0 : 1;
}
