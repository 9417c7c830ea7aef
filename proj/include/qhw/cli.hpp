#pragma once

#include <string>
#include <vector>

namespace qhw::cli {

enum ExitCode : int { kPass = 0, kParse = 1, kInvalid = 2, kVerification = 3 };

struct Result {
  int exit_code = kPass;
  std::string out;
  std::string err;
};

/// Runs one command line; args exclude the program name.
Result run(const std::vector<std::string>& args);

}  // namespace qhw::cli
