#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "eventlens/corpus.hpp"
#include "eventlens/date.hpp"

namespace eventlens {

/// Dates paired with one real value per date. Dates strictly increasing.
struct DatedSeries {
  std::string pair;  // e.g. "GBP/EUR"
  std::vector<Date> dates;
  Eigen::VectorXd values;

  Eigen::Index size() const { return static_cast<Eigen::Index>(dates.size()); }
};

/// Rate levels, quote units per base unit; every value > 0.
struct RateSeries : DatedSeries {};

/// Simple returns; every value > -1. Dates are the rate dates minus the first.
struct ReturnSeries : DatedSeries {};

enum class NewsMetric { Mentions, Articles };
enum class RateMode { Level, Pct, AbsPct };

/// Equal-length news/rate vectors over a common set of dates, n >= 2.
struct AlignedSeries {
  std::vector<Date> dates;
  Eigen::VectorXd news_values;
  Eigen::VectorXd rate_values;

  Eigen::Index size() const { return static_cast<Eigen::Index>(dates.size()); }
};

/// Parses rate CSV text with a Date column (DD/MM/YYYY or YYYY-MM-DD) and
/// the given value column. Empty and "NA"/"N/A" cells are skipped; output
/// is sorted by date.
RateSeries parse_rate_csv(const std::string& text, const std::string& value_column,
                          const std::string& pair, const std::string& origin = "<memory>");
RateSeries load_rate_csv(const std::string& path, const std::string& value_column,
                         const std::string& pair = {});

RateSeries exclude_weekends(const RateSeries& series);
DailyNewsSeries exclude_weekends(const DailyNewsSeries& news);

/// Alternative weekend policy: Saturday and Sunday take Friday's level.
RateSeries carry_forward_weekends(const RateSeries& series);

/// Throws Error(EmptySeries) when fewer than two points.
ReturnSeries pct_change(const RateSeries& series);
ReturnSeries abs_pct_change(const RateSeries& series);

/// level' = 1 / level with the pair label flipped ("EUR/GBP" -> "GBP/EUR").
RateSeries invert(const RateSeries& series);

/// GBP/USD = EUR/USD / EUR/GBP on the common dates. Throws Error(NoOverlap).
RateSeries derive_cross_rate(const RateSeries& eur_usd, const RateSeries& eur_gbp);

/// Restricts both sides to the common dates; the rate side is first
/// transformed per mode. Throws Error(InsufficientOverlap) if n < 2.
AlignedSeries align(const DailyNewsSeries& news, const RateSeries& rate, NewsMetric metric,
                    RateMode mode);
AlignedSeries align(const DailyNewsSeries& news, const DatedSeries& values, NewsMetric metric);

/// Date,Value with ISO dates.
std::string series_csv(const DatedSeries& series);

std::string flip_pair(const std::string& pair);

}  // namespace eventlens
