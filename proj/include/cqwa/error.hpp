#pragma once

#include <stdexcept>
#include <string>

namespace cqwa {

enum class ErrorKind {
  NotDivisible,
  InvalidExponent,
  InvalidArgument,
  DimensionMismatch,
  NonPBW,
  NotConnected,
  NotSingleParameter,
  DegreeExceeded,
  IncompatibleSeed,
  NotCommutativeAtOne,
  ParseError,
};

const char* kind_name(ErrorKind kind);

// Every failure the library reports is one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonPBW: return "NonPBW";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotSingleParameter: return "NotSingleParameter";
    case ErrorKind::DegreeExceeded: return "DegreeExceeded";
    case ErrorKind::IncompatibleSeed: return "IncompatibleSeed";
    case ErrorKind::NotCommutativeAtOne: return "NotCommutativeAtOne";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace cqwa
