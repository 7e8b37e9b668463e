#pragma once

#include <chrono>
#include <string>

#include "eventlens/date.hpp"
#include "eventlens/error.hpp"

namespace eventlens {

struct FetchOptions {
  int retries = 2;
  std::chrono::milliseconds timeout{10000};
  std::chrono::milliseconds backoff{500};  // doubled after every failed attempt
  std::string raw_dir = "raw";
};

struct FetchResult {
  std::string url;
  std::string path;  // where the body was written
  std::string body;
  int attempts = 0;
};

/// Thrown after retries are exhausted on transport failures.
class NetworkError : public Error {
 public:
  NetworkError(const std::string& message, int attempts)
      : Error(ErrorCode::NetworkError, message), attempts_(attempts) {}
  int attempts() const noexcept { return attempts_; }

 private:
  int attempts_;
};

/// Thrown on a non-2xx response; no retry and no file is written.
class HttpStatusError : public Error {
 public:
  HttpStatusError(const std::string& message, int status)
      : Error(ErrorCode::HttpStatus, message), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

/// Replaces {pair}, {start} and {end} (ISO dates). Throws Error(ConfigError)
/// if {pair} or both date placeholders are missing.
std::string expand_url_template(const std::string& url_template, const std::string& pair,
                                const DateRange& range);

/// HTTP GET of the expanded template; the body is written verbatim to
/// raw_dir/<pair>.csv before it is returned.
FetchResult fetch_rate_csv(const std::string& url_template, const std::string& pair,
                           const DateRange& range, const FetchOptions& options);

}  // namespace eventlens
