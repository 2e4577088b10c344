#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quatseq::cli {

enum ExitCode : int {
  kOk = 0,
  kNotPerfect = 1,
  kUsage = 2,
  kIoError = 3,
  kBudgetExceeded = 4,
};

/// Runs the command line `args` (without the program name). Input paths of
/// "-" read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace quatseq::cli
