// SPDX-License-Identifier: Apache-2.0

#include "hli/error.hpp"

namespace hli {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidVocabulary: return "InvalidVocabulary";
    case ErrorKind::CaptureError: return "CaptureError";
    case ErrorKind::FlagMissing: return "FlagMissing";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::MeasureNotNormalized: return "MeasureNotNormalized";
    case ErrorKind::TableIncomplete: return "TableIncomplete";
    case ErrorKind::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::NotSubvocabulary: return "NotSubvocabulary";
    case ErrorKind::InvalidRenaming: return "InvalidRenaming";
    case ErrorKind::InvalidDissection: return "InvalidDissection";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::NotASentence: return "NotASentence";
    case ErrorKind::ContainmentViolated: return "ContainmentViolated";
    case ErrorKind::NotCrisp: return "NotCrisp";
    case ErrorKind::InvalidLevelConfig: return "InvalidLevelConfig";
    case ErrorKind::SentenceNotInSystem: return "SentenceNotInSystem";
    case ErrorKind::NotASubuniverse: return "NotASubuniverse";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

ParseError::ParseError(ErrorKind kind, SourceSpan span, const std::string& message)
    : Error(kind, message + " (line " + std::to_string(span.line) + ", column " +
                      std::to_string(span.column) + ")"),
      span_(span) {}

}  // namespace hli
