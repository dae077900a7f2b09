// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hli {

enum class ErrorKind {
  InvalidVocabulary,
  CaptureError,
  FlagMissing,
  SyntaxError,
  UnknownSymbol,
  ArityMismatch,
  FormatError,
  MeasureNotNormalized,
  TableIncomplete,
  ValueOutOfRange,
  UniverseTooLarge,
  NotSubvocabulary,
  InvalidRenaming,
  InvalidDissection,
  UnboundVariable,
  NotASentence,
  ContainmentViolated,
  NotCrisp,
  InvalidLevelConfig,
  SentenceNotInSystem,
  NotASubuniverse,
  SearchSpaceTooLarge,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Base class for every error raised by the library. The kind is stable and
/// is what callers should branch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

/// Byte range in parser input. line and column are 1-based.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, SourceSpan span, const std::string& message);

  const SourceSpan& span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

}  // namespace hli
