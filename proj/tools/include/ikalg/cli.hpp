#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ikalg::cli {

enum ExitCode : int {
  kOk = 0,
  kIdentityFailure = 1,
  kUsage = 2,
  kBudget = 3,
};

struct RunConfig {
  std::string family = "sym";
  std::string group_file;
  int level = 3;
  std::string format = "table";
  std::string out;
  int jobs = 0;  // 0: hardware concurrency
  std::uint64_t budget_elements = 10'000'000;
  std::uint64_t seed = 20240517;
};

/// Parses `args` (without the program name), runs the command and writes its
/// output to `out` (or the --out file). Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ikalg::cli
