#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cosetlab {

enum class ErrorCode {
  InvalidSpec,
  InvalidArgument,
  NotAGroup,
  OrderCapExceeded,
  UnknownFamily,
  SubgroupCountCapExceeded,
  ParentMismatch,
  NotASubgroup,
  EmptyList,
  CliqueCapExceeded,
  Overflow,
  IoError,
  CacheCorrupt,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for the cap-style errors that the CLI maps to its "limits" exit code.
  bool is_cap() const noexcept {
    return code_ == ErrorCode::OrderCapExceeded || code_ == ErrorCode::SubgroupCountCapExceeded ||
           code_ == ErrorCode::CliqueCapExceeded;
  }

 private:
  ErrorCode code_;
};

}  // namespace cosetlab
