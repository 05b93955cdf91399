#pragma once

// The subcommands of the `nfold` tool. Each returns the process exit code
// and writes results to `out`, diagnostics to `err`.

#include <iosfwd>
#include <optional>
#include <string>

namespace nfold::cli {

enum Exit : int {
  kOk = 0,
  kError = 1,
  kInfeasible = 2,
  kUnbounded = 3,
  kCheckFailed = 4,
};

struct Common {
  std::optional<std::string> out_path;  // results go here instead of `out`
  unsigned threads = 1;
  bool verify_complexity = false;
};

int cmd_solve(const std::string& instance_path, const Common& common, std::ostream& out, std::ostream& err);
int cmd_graver(const std::string& a_path, const std::string& b_path, long n, const Common& common,
               std::ostream& out, std::ostream& err);
int cmd_encode(const std::string& kind, const std::string& input_path, bool solve, const Common& common,
               std::ostream& out, std::ostream& err);
int cmd_check(const std::string& instance_path, const std::string& solution_path, std::ostream& out,
              std::ostream& err);
int cmd_complexity(const std::string& a_path, const std::string& b_path, const Common& common,
                   std::ostream& out, std::ostream& err);

}  // namespace nfold::cli
