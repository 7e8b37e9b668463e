#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eventlens/corpus.hpp"
#include "eventlens/date.hpp"
#include "eventlens/eventstudy.hpp"
#include "eventlens/stats.hpp"
#include "eventlens/timeseries.hpp"
#include "eventlens/topics.hpp"

namespace eventlens {

enum class WeekendPolicy { Exclude, CarryForward };

struct ExtraPair {
  std::string name;  // e.g. "XRP/USD"
  std::string path;
};

/// Every tunable of a run. Loaded from a flat `key = value` file; see
/// config_keys() for the accepted keys.
struct RunConfig {
  DateRange study_range{Date::from_ymd(2016, 1, 1), Date::from_ymd(2019, 4, 19)};
  std::string term = "brexit";
  MentionMode mention_mode = MentionMode::Token;

  std::string news_path;
  std::string stopword_path;
  std::vector<std::string> boilerplate_markers;

  std::string eurgbp_path;
  std::string eurusd_path;
  std::string value_column = "Value";
  std::vector<ExtraPair> extra_pairs;
  std::string extra_value_column = "Mid";
  WeekendPolicy weekend_policy = WeekendPolicy::Exclude;

  int window_len = 11;
  int window_step = 1;
  double window_alpha = 0.05;
  stats::Tail tail = stats::Tail::Two;
  NewsMetric window_metric = NewsMetric::Mentions;
  RateMode window_rate_mode = RateMode::Level;
  double quantile = 0.05;

  int estimation_len = 150;
  int event_half_width = 5;
  double event_alpha = 0.10;
  double panel_alpha = 0.05;
  VarianceWindow variance_window = VarianceWindow::Estimation;
  int max_shift_days = 7;
  std::vector<Date> event_dates;  // extra events studied alongside detected ones

  LdaParams lda;
  int topic_half_width = 5;
  int top_n = 20;
  std::vector<std::string> tracked_words{"brexit", "deal", "delay", "referendum", "theresa", "vote"};

  std::string out_dir = "out";
  int parallel = 1;

  std::string rate_url_template;
  std::vector<std::string> fetch_pairs;
  int fetch_retries = 2;
  int fetch_timeout_ms = 10000;
  int fetch_backoff_ms = 500;
  std::string raw_dir = "raw";

  EventStudyConfig event_study_config(double alpha) const;
};

struct ConfigKey {
  std::string_view name;
  std::string_view help;
};

const std::vector<ConfigKey>& config_keys();

/// Applies one key. Relative paths are resolved against base_dir.
/// Throws Error(ConfigError) for unknown keys or bad values.
void apply_config_value(RunConfig& cfg, std::string_view key, std::string_view value,
                        const std::string& base_dir = {});

/// Parses `key = value` lines; '#' starts a comment line.
RunConfig parse_config(std::string_view text, const std::string& base_dir = {});
RunConfig load_config(const std::string& path);

/// Checks cross-field preconditions. Throws Error(ConfigError).
void validate(const RunConfig& cfg);

}  // namespace eventlens
