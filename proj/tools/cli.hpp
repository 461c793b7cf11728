#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace soficshift::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFalse = 1,
  kInputError = 2,
  kCapExceeded = 3,
};

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace soficshift::cli
