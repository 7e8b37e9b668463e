#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eventlens {

enum class ErrorCode {
  InvalidArgument,
  IoError,
  MalformedUrl,
  MalformedDate,
  MissingColumn,
  UnparseableRow,
  EmptySeries,
  EmptyRange,
  NoOverlap,
  InsufficientOverlap,
  LengthMismatch,
  ZeroVariance,
  InvalidAlpha,
  SeriesTooShort,
  InsufficientHistory,
  EventDateNotTraded,
  DegenerateVariance,
  MissingPair,
  EmptyCorpus,
  KTooLarge,
  BadTopicIndex,
  NoDocumentsInWindow,
  NetworkError,
  HttpStatus,
  ConfigError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure in the library is reported through this type. The code
/// is stable and matches the error names used in the docs; the message
/// carries context such as the row number or URL.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eventlens
