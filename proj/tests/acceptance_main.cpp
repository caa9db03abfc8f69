#include <iostream>

#include "serre/selftest.hpp"

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::string(argv[1]) == "--quick";
  bool ok = serre::run_acceptance(quick, std::cout);
  return ok ? 0 : 1;
}
