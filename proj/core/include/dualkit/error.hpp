#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dualkit {

enum class ErrorKind {
  ZeroConstantTerm,
  InnerSeriesHasConstantTerm,
  NotOrderOne,
  NegativeLowerIndex,
  OutOfTruncation,
  DegenerateDenominator,
  BadParameter,
  TooShort,
  GridTooSmall,
  ParseError,
  DivisionByZero,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is stable and machine
/// readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dualkit
