#include "cubictk/acceptance.hpp"

#include <cstdlib>

int main(int argc, char** argv) {
  int which = argc > 1 ? std::atoi(argv[1]) : 0;
  return ctk::run_acceptance(which) == 0 ? 0 : 1;
}
