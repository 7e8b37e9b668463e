#include "eventlens/fetch.hpp"

#include <httplib.h>

#include <filesystem>
#include <thread>

#include "eventlens/output.hpp"

namespace eventlens {

namespace {

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

std::string file_stem_for(std::string pair) {
  for (char& c : pair) {
    if (c == '/' || c == '\\' || c == ':') c = '_';
  }
  return pair;
}

struct ParsedUrl {
  std::string origin;  // scheme://host[:port]
  std::string target;  // path and query
};

ParsedUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::ConfigError, "URL without scheme: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

std::string expand_url_template(const std::string& url_template, const std::string& pair,
                                const DateRange& range) {
  const bool has_pair = url_template.find("{pair}") != std::string::npos;
  const bool has_date = url_template.find("{start}") != std::string::npos ||
                        url_template.find("{end}") != std::string::npos;
  if (!has_pair || !has_date) {
    throw Error(ErrorCode::ConfigError,
                "rate_url_template needs {pair} and {start}/{end} placeholders: " + url_template);
  }
  std::string url = url_template;
  replace_all(url, "{pair}", pair);
  replace_all(url, "{start}", to_iso(range.first));
  replace_all(url, "{end}", to_iso(range.last));
  return url;
}

FetchResult fetch_rate_csv(const std::string& url_template, const std::string& pair,
                           const DateRange& range, const FetchOptions& options) {
  FetchResult result;
  result.url = expand_url_template(url_template, pair, range);
  const auto parsed = split_url(result.url);

  httplib::Client client(parsed.origin);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(options.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(options.timeout - secs);
  client.set_connection_timeout(static_cast<time_t>(secs.count()), static_cast<time_t>(usecs.count()));
  client.set_read_timeout(static_cast<time_t>(secs.count()), static_cast<time_t>(usecs.count()));
  client.set_follow_location(true);

  auto delay = options.backoff;
  std::string last_error;
  const int max_attempts = options.retries + 1;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    result.attempts = attempt;
    auto response = client.Get(parsed.target);
    if (!response) {
      last_error = httplib::to_string(response.error());
      if (attempt < max_attempts) {
        std::this_thread::sleep_for(delay);
        delay *= 2;
      }
      continue;
    }
    if (response->status < 200 || response->status >= 300) {
      throw HttpStatusError(pair + ": HTTP " + std::to_string(response->status) + " from " +
                                result.url,
                            response->status);
    }
    result.body = std::move(response->body);
    result.path = (std::filesystem::path(options.raw_dir) / (file_stem_for(pair) + ".csv")).string();
    write_file_atomic(result.path, result.body);
    return result;
  }
  throw NetworkError(pair + ": " + last_error + " fetching " + result.url + " after " +
                         std::to_string(max_attempts) + " attempts",
                     max_attempts);
}

}  // namespace eventlens
