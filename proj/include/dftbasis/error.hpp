#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dftbasis {

enum class ErrorCode {
  NotPrime,
  NotOneMod4,
  NotAGenerator,
  TooLarge,
  ZeroArgument,
  LengthMismatch,
  ContextMismatch,
  IndexOutOfRange,
  NotInSL2,
  NotOrderFour,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dftbasis
