#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace colourlex {

enum class ErrorKind {
  NoNearSynonym,
  InsufficientDistractors,
  UnknownCategory,
  UnknownSense,
  EmptyLexicon,
  EmptyInput,
  DegenerateInput,
  UnknownLabel,
  NoOverlap,
  IoError,
  FormatError,
  ParseError,
  DanglingPointer,
  UnknownSynset,
  MeasureUnavailable,
  MissingAuxiliary,
  MissingPrediction,
  InvalidArgument,
  InvariantViolation,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every module error carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace colourlex
