#include "qhw/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const qhw::cli::Result r = qhw::cli::run({argv + 1, argv + argc});
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
