#include "colourlex/error.hpp"

namespace colourlex {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoNearSynonym: return "NoNearSynonym";
    case ErrorKind::InsufficientDistractors: return "InsufficientDistractors";
    case ErrorKind::UnknownCategory: return "UnknownCategory";
    case ErrorKind::UnknownSense: return "UnknownSense";
    case ErrorKind::EmptyLexicon: return "EmptyLexicon";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NoOverlap: return "NoOverlap";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DanglingPointer: return "DanglingPointer";
    case ErrorKind::UnknownSynset: return "UnknownSynset";
    case ErrorKind::MeasureUnavailable: return "MeasureUnavailable";
    case ErrorKind::MissingAuxiliary: return "MissingAuxiliary";
    case ErrorKind::MissingPrediction: return "MissingPrediction";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace colourlex
