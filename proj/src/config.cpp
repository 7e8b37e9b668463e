#include "eventlens/config.hpp"

#include <charconv>
#include <filesystem>
#include <functional>
#include <sstream>

#include "eventlens/csv.hpp"
#include "eventlens/error.hpp"

namespace eventlens {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = s.find(sep, start);
    const auto piece = trim(s.substr(start, end == std::string_view::npos ? s.npos : end - start));
    if (!piece.empty()) out.emplace_back(piece);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view why) {
  throw Error(ErrorCode::ConfigError, std::string(key) + " = '" + std::string(value) + "': " +
                                          std::string(why));
}

int to_int(std::string_view key, std::string_view value) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) bad_value(key, value, "not an integer");
  return out;
}

double to_double(std::string_view key, std::string_view value) {
  double out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) bad_value(key, value, "not a number");
  return out;
}

Date to_date(std::string_view key, std::string_view value) {
  try {
    return parse_date(value);
  } catch (const Error& e) {
    bad_value(key, value, e.what());
  }
}

std::string resolve(std::string_view value, const std::string& base_dir) {
  if (value.empty()) return {};
  std::filesystem::path p{std::string(value)};
  if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
  return p.lexically_normal().string();
}

using Setter = std::function<void(RunConfig&, std::string_view, std::string_view, const std::string&)>;

struct KeySpec {
  ConfigKey key;
  Setter set;
};

const std::vector<KeySpec>& key_specs() {
  static const std::vector<KeySpec> specs = {
      {{"study_start", "first day of the study range (YYYY-MM-DD or DD/MM/YYYY)"},
       [](RunConfig& c, auto k, auto v, auto&) { c.study_range.first = to_date(k, v); }},
      {{"study_end", "last day of the study range, inclusive"},
       [](RunConfig& c, auto k, auto v, auto&) { c.study_range.last = to_date(k, v); }},
      {{"term", "tracked term counted as mentions"},
       [](RunConfig& c, auto, auto v, auto&) { c.term = std::string(v); }},
      {{"mention_mode", "token | substring"},
       [](RunConfig& c, auto k, auto v, auto&) {
         if (v == "token") c.mention_mode = MentionMode::Token;
         else if (v == "substring") c.mention_mode = MentionMode::Substring;
         else bad_value(k, v, "expected token or substring");
       }},
      {{"news_path", "news CSV (Date,Article,Tokens,Source)"},
       [](RunConfig& c, auto, auto v, auto& b) { c.news_path = resolve(v, b); }},
      {{"stopword_path", "newline-delimited stopword file"},
       [](RunConfig& c, auto, auto v, auto& b) { c.stopword_path = resolve(v, b); }},
      {{"boilerplate_markers", "'|'-separated literal markers; text from the first hit is dropped"},
       [](RunConfig& c, auto, auto v, auto&) { c.boilerplate_markers = split(v, '|'); }},
      {{"eurgbp_path", "EUR/GBP rate CSV"},
       [](RunConfig& c, auto, auto v, auto& b) { c.eurgbp_path = resolve(v, b); }},
      {{"eurusd_path", "EUR/USD rate CSV"},
       [](RunConfig& c, auto, auto v, auto& b) { c.eurusd_path = resolve(v, b); }},
      {{"value_column", "value column of the FX rate files"},
       [](RunConfig& c, auto, auto v, auto&) { c.value_column = std::string(v); }},
      {{"extra_pairs", "comma-separated NAME=PATH, e.g. XRP/USD=xrp.csv"},
       [](RunConfig& c, auto k, auto v, auto& b) {
         c.extra_pairs.clear();
         for (const auto& item : split(v, ',')) {
           const auto eq = item.find('=');
           if (eq == std::string::npos) bad_value(k, v, "expected NAME=PATH");
           c.extra_pairs.push_back({std::string(trim(std::string_view(item).substr(0, eq))),
                                    resolve(trim(std::string_view(item).substr(eq + 1)), b)});
         }
       }},
      {{"extra_value_column", "value column of the extra pair files"},
       [](RunConfig& c, auto, auto v, auto&) { c.extra_value_column = std::string(v); }},
      {{"weekend_policy", "exclude | carry_forward"},
       [](RunConfig& c, auto k, auto v, auto&) {
         if (v == "exclude") c.weekend_policy = WeekendPolicy::Exclude;
         else if (v == "carry_forward") c.weekend_policy = WeekendPolicy::CarryForward;
         else bad_value(k, v, "expected exclude or carry_forward");
       }},
      {{"window_len", "window correlation length in observations"},
       [](RunConfig& c, auto k, auto v, auto&) { c.window_len = to_int(k, v); }},
      {{"window_step", "window correlation step"},
       [](RunConfig& c, auto k, auto v, auto&) { c.window_step = to_int(k, v); }},
      {{"window_alpha", "significance level for correlation windows"},
       [](RunConfig& c, auto k, auto v, auto&) { c.window_alpha = to_double(k, v); }},
      {{"tail", "two | upper"},
       [](RunConfig& c, auto k, auto v, auto&) {
         if (v == "two") c.tail = stats::Tail::Two;
         else if (v == "upper") c.tail = stats::Tail::Upper;
         else bad_value(k, v, "expected two or upper");
       }},
      {{"window_metric", "mentions | articles"},
       [](RunConfig& c, auto k, auto v, auto&) {
         if (v == "mentions") c.window_metric = NewsMetric::Mentions;
         else if (v == "articles") c.window_metric = NewsMetric::Articles;
         else bad_value(k, v, "expected mentions or articles");
       }},
      {{"window_rate_mode", "level | pct | abs_pct"},
       [](RunConfig& c, auto k, auto v, auto&) {
         if (v == "level") c.window_rate_mode = RateMode::Level;
         else if (v == "pct") c.window_rate_mode = RateMode::Pct;
         else if (v == "abs_pct") c.window_rate_mode = RateMode::AbsPct;
         else bad_value(k, v, "expected level, pct or abs_pct");
       }},
      {{"quantile", "top-quantile fraction q"},
       [](RunConfig& c, auto k, auto v, auto&) { c.quantile = to_double(k, v); }},
      {{"estimation_len", "estimation window in trading days"},
       [](RunConfig& c, auto k, auto v, auto&) { c.estimation_len = to_int(k, v); }},
      {{"event_half_width", "h for the [-h,+h] event window"},
       [](RunConfig& c, auto k, auto v, auto&) { c.event_half_width = to_int(k, v); }},
      {{"event_alpha", "significance level of per-event reports"},
       [](RunConfig& c, auto k, auto v, auto&) { c.event_alpha = to_double(k, v); }},
      {{"panel_alpha", "significance level of cross-pair panels"},
       [](RunConfig& c, auto k, auto v, auto&) { c.panel_alpha = to_double(k, v); }},
      {{"variance_window", "estimation | event"},
       [](RunConfig& c, auto k, auto v, auto&) {
         if (v == "estimation") c.variance_window = VarianceWindow::Estimation;
         else if (v == "event") c.variance_window = VarianceWindow::Event;
         else bad_value(k, v, "expected estimation or event");
       }},
      {{"max_shift_days", "how far an untraded event date may move forward"},
       [](RunConfig& c, auto k, auto v, auto&) { c.max_shift_days = to_int(k, v); }},
      {{"event_dates", "comma-separated extra event dates"},
       [](RunConfig& c, auto k, auto v, auto&) {
         c.event_dates.clear();
         for (const auto& d : split(v, ',')) c.event_dates.push_back(to_date(k, d));
       }},
      {{"lda_k", "topics per event window"},
       [](RunConfig& c, auto k, auto v, auto&) { c.lda.k = to_int(k, v); }},
      {{"lda_alpha", "document-topic prior; empty means 50/k"},
       [](RunConfig& c, auto k, auto v, auto&) {
         if (v.empty()) c.lda.alpha_prior.reset();
         else c.lda.alpha_prior = to_double(k, v);
       }},
      {{"lda_eta", "topic-word prior"},
       [](RunConfig& c, auto k, auto v, auto&) { c.lda.eta_prior = to_double(k, v); }},
      {{"lda_iterations", "Gibbs sweeps"},
       [](RunConfig& c, auto k, auto v, auto&) { c.lda.iterations = to_int(k, v); }},
      {{"topic_half_width", "calendar-day half width of topic windows"},
       [](RunConfig& c, auto k, auto v, auto&) { c.topic_half_width = to_int(k, v); }},
      {{"top_n", "top words per topic"},
       [](RunConfig& c, auto k, auto v, auto&) { c.top_n = to_int(k, v); }},
      {{"tracked_words", "comma-separated words for the timeline"},
       [](RunConfig& c, auto, auto v, auto&) { c.tracked_words = split(v, ','); }},
      {{"seed", "base RNG seed"},
       [](RunConfig& c, auto k, auto v, auto&) {
         std::uint64_t s = 0;
         auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), s);
         if (ec != std::errc{} || ptr != v.data() + v.size()) bad_value(k, v, "not an unsigned integer");
         c.lda.seed = s;
       }},
      {{"out_dir", "output directory"},
       [](RunConfig& c, auto, auto v, auto& b) { c.out_dir = resolve(v, b); }},
      {{"parallel", "worker threads for event studies and LDA fits"},
       [](RunConfig& c, auto k, auto v, auto&) { c.parallel = to_int(k, v); }},
      {{"rate_url_template", "URL with {pair}, {start}, {end} placeholders"},
       [](RunConfig& c, auto, auto v, auto&) { c.rate_url_template = std::string(v); }},
      {{"fetch_pairs", "comma-separated pair codes to fetch"},
       [](RunConfig& c, auto, auto v, auto&) { c.fetch_pairs = split(v, ','); }},
      {{"fetch_retries", "retries after a transport failure"},
       [](RunConfig& c, auto k, auto v, auto&) { c.fetch_retries = to_int(k, v); }},
      {{"fetch_timeout_ms", "connect/read timeout per attempt"},
       [](RunConfig& c, auto k, auto v, auto&) { c.fetch_timeout_ms = to_int(k, v); }},
      {{"fetch_backoff_ms", "initial retry delay, doubled per retry"},
       [](RunConfig& c, auto k, auto v, auto&) { c.fetch_backoff_ms = to_int(k, v); }},
      {{"raw_dir", "directory for fetched raw CSVs"},
       [](RunConfig& c, auto, auto v, auto& b) { c.raw_dir = resolve(v, b); }},
  };
  return specs;
}

}  // namespace

EventStudyConfig RunConfig::event_study_config(double alpha) const {
  EventStudyConfig cfg;
  cfg.estimation_len = estimation_len;
  cfg.event_half_width = event_half_width;
  cfg.alpha = alpha;
  cfg.variance_window = variance_window;
  cfg.max_shift_days = max_shift_days;
  return cfg;
}

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = [] {
    std::vector<ConfigKey> out;
    for (const auto& s : key_specs()) out.push_back(s.key);
    return out;
  }();
  return keys;
}

void apply_config_value(RunConfig& cfg, std::string_view key, std::string_view value,
                        const std::string& base_dir) {
  for (const auto& spec : key_specs()) {
    if (spec.key.name == key) {
      spec.set(cfg, key, trim(value), base_dir);
      return;
    }
  }
  throw Error(ErrorCode::ConfigError, "unknown key '" + std::string(key) + "'");
}

RunConfig parse_config(std::string_view text, const std::string& base_dir) {
  RunConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError, "line " + std::to_string(line_no) + ": expected key = value");
    }
    apply_config_value(cfg, trim(body.substr(0, eq)), trim(body.substr(eq + 1)), base_dir);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::string text;
  try {
    text = csv::read_text_file(path);
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, e.what());
  }
  const auto base = std::filesystem::path(path).parent_path().string();
  return parse_config(text, base);
}

void validate(const RunConfig& cfg) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::ConfigError, why); };
  if (cfg.study_range.empty()) fail("study_end precedes study_start");
  if (cfg.term.empty()) fail("term must not be empty");
  if (cfg.window_len < 3) fail("window_len must be >= 3");
  if (cfg.window_step < 1) fail("window_step must be >= 1");
  for (double a : {cfg.window_alpha, cfg.event_alpha, cfg.panel_alpha}) {
    if (!(a > 0 && a < 1)) fail("significance levels must lie in (0,1)");
  }
  if (!(cfg.quantile > 0 && cfg.quantile < 1)) fail("quantile must lie in (0,1)");
  if (cfg.estimation_len < 3) fail("estimation_len must be >= 3");
  if (cfg.event_half_width < 0) fail("event_half_width must be >= 0");
  if (cfg.max_shift_days < 0) fail("max_shift_days must be >= 0");
  if (cfg.lda.k < 1) fail("lda_k must be >= 1");
  if (cfg.lda.alpha_prior && !(*cfg.lda.alpha_prior > 0)) fail("lda_alpha must be > 0");
  if (!(cfg.lda.eta_prior > 0)) fail("lda_eta must be > 0");
  if (cfg.lda.iterations < 0) fail("lda_iterations must be >= 0");
  if (cfg.topic_half_width < 0) fail("topic_half_width must be >= 0");
  if (cfg.top_n < 1) fail("top_n must be >= 1");
  if (cfg.parallel < 1) fail("parallel must be >= 1");
  if (cfg.fetch_retries < 0) fail("fetch_retries must be >= 0");
  if (cfg.fetch_timeout_ms < 1) fail("fetch_timeout_ms must be >= 1");
  if (cfg.fetch_backoff_ms < 0) fail("fetch_backoff_ms must be >= 0");
}

}  // namespace eventlens
