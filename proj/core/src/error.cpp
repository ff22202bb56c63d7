#include "dualkit/error.hpp"

namespace dualkit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::InnerSeriesHasConstantTerm: return "InnerSeriesHasConstantTerm";
    case ErrorKind::NotOrderOne: return "NotOrderOne";
    case ErrorKind::NegativeLowerIndex: return "NegativeLowerIndex";
    case ErrorKind::OutOfTruncation: return "OutOfTruncation";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::GridTooSmall: return "GridTooSmall";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

}  // namespace dualkit
