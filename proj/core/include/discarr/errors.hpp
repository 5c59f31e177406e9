#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace discarr {

enum class ErrorCode {
  kDivisionByZero,
  kFieldMismatch,
  kInvalidField,
  kParseError,
  kNotSquare,
  kDimensionMismatch,
  kDegeneratePoints,
  kNotGeneric,
  kNoGenericWitness,
  kBadSubsetSize,
  kTooLarge,
  kExhaustedRetries,
  kShapeMismatch,
  kBadFourSet,
  kNotDimension3,
  kTooFewHyperplanes,
  kClosureViolation,
  kNotAMatchingLabel,
  kInvalidArgument,
};

const char* to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code is the
/// machine-readable part; the message carries context for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::kParseError,
              what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace discarr
