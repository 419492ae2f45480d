#pragma once

#include <stdexcept>
#include <string>

namespace rwg {

/// Categories double as process exit codes for the command-line tool.
enum class ErrorCode : int {
  kUsage = 1,
  kNonErgodic = 2,
  kUnsupported = 3,
  kBudget = 4,
  kNumeric = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace rwg
