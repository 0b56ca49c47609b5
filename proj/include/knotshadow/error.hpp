#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotshadow {

enum class ErrorKind {
  NotDivisible,
  ConstantTermNonzero,
  NonUnitLeading,
  LengthMismatch,
  InvalidShadow,
  TooManyCrossings,
  InvalidArc,
  InvalidCut,
  UnsupportedSpec,
  NegativeComponent,
  RecurrenceMismatch,
  SyntaxError,
  UnknownFamily,
  ClosureUnsupported,
  FormatError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ConstantTermNonzero: return "ConstantTermNonzero";
    case ErrorKind::NonUnitLeading: return "NonUnitLeading";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidShadow: return "InvalidShadow";
    case ErrorKind::TooManyCrossings: return "TooManyCrossings";
    case ErrorKind::InvalidArc: return "InvalidArc";
    case ErrorKind::InvalidCut: return "InvalidCut";
    case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorKind::NegativeComponent: return "NegativeComponent";
    case ErrorKind::RecurrenceMismatch: return "RecurrenceMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::ClosureUnsupported: return "ClosureUnsupported";
    case ErrorKind::FormatError: return "FormatError";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with the 0-indexed byte offset where it was detected.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, std::size_t offset, const std::string& what)
      : Error(kind, "at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace knotshadow
