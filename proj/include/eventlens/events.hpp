#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eventlens/correlation.hpp"
#include "eventlens/corpus.hpp"

namespace eventlens {

enum class DetectionMethod { WindowCorrelation, TopQuantile, Configured };

std::string_view to_string(DetectionMethod method);

struct EventDate {
  Date date;
  DetectionMethod method = DetectionMethod::WindowCorrelation;
  std::optional<double> window_r;  // strongest significant window containing the date
  int article_count = 0;
  int mention_count = 0;

  friend bool operator==(const EventDate&, const EventDate&) = default;
};

/// Greedy left-to-right clustering: a date joins the current cluster when it
/// is at most span weekdays after the previous date. Each cluster is
/// replaced by its highest article_count date (earliest on ties).
std::vector<EventDate> cluster_collapse(const std::vector<EventDate>& dates, int span);

/// Dates inside significant windows whose article count is strictly above
/// the mean daily count of news, collapsed with span = window length.
std::vector<EventDate> detect_window_events(const WindowCorrelationSeries& wc,
                                            const DailyNewsSeries& news);

/// Days whose article count reaches the ceil(q*N)-th largest count, ties
/// at the threshold included.
std::vector<EventDate> detect_top_quantile_events(const DailyNewsSeries& news, double q = 0.05);

/// date,method,window_r,article_count,mention_count
std::string events_csv(const std::vector<EventDate>& events);

}  // namespace eventlens
