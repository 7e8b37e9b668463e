#include "eventlens/error.hpp"

namespace eventlens {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::MalformedUrl: return "MalformedUrl";
    case ErrorCode::MalformedDate: return "MalformedDate";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::UnparseableRow: return "UnparseableRow";
    case ErrorCode::EmptySeries: return "EmptySeries";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::NoOverlap: return "NoOverlap";
    case ErrorCode::InsufficientOverlap: return "InsufficientOverlap";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::InsufficientHistory: return "InsufficientHistory";
    case ErrorCode::EventDateNotTraded: return "EventDateNotTraded";
    case ErrorCode::DegenerateVariance: return "DegenerateVariance";
    case ErrorCode::MissingPair: return "MissingPair";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::BadTopicIndex: return "BadTopicIndex";
    case ErrorCode::NoDocumentsInWindow: return "NoDocumentsInWindow";
    case ErrorCode::NetworkError: return "NetworkError";
    case ErrorCode::HttpStatus: return "HttpStatus";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace eventlens
