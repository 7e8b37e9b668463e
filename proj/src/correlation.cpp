#include "eventlens/correlation.hpp"

#include "eventlens/csv.hpp"

namespace eventlens {

double critical_r(int df, double alpha, stats::Tail tail) {
  if (df < 1) throw Error(ErrorCode::InvalidArgument, "critical_r needs df >= 1");
  const double t = stats::critical_t(df, alpha, tail);
  return t / std::sqrt(t * t + df);
}

CorrelationResult correlation_test(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                   double alpha, stats::Tail tail) {
  CorrelationResult result;
  result.r = pearson(x, y);
  result.n = x.size();
  result.df = result.n - 2;
  if (result.df >= 1) {
    result.critical_r = critical_r(static_cast<int>(result.df), alpha, tail);
    result.significant = is_significant(result.r, result.critical_r, tail);
  }
  return result;
}

CorrelationTable overall_correlation(const DailyNewsSeries& news, const RateSeries& rate) {
  CorrelationTable table;
  const RateMode modes[] = {RateMode::Level, RateMode::Pct, RateMode::AbsPct};
  const NewsMetric metrics[] = {NewsMetric::Mentions, NewsMetric::Articles};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto aligned = align(news, rate, metrics[j], modes[i]);
      table(i, j) = pearson(aligned.news_values, aligned.rate_values);
    }
  }
  return table;
}

std::string correlation_table_csv(const CorrelationTable& table) {
  csv::Writer out({"rate_mode", "mentions", "articles"});
  const char* names[] = {"level", "pct_change", "abs_pct_change"};
  for (int i = 0; i < 3; ++i) {
    out.write_row({names[i], csv::format_double(table(i, 0)), csv::format_double(table(i, 1))});
  }
  return out.str();
}

std::vector<CorrelationPoint> cumulative_correlation(const AlignedSeries& aligned, double alpha,
                                                     stats::Tail tail) {
  const auto n = aligned.size();
  if (n < 3) throw Error(ErrorCode::SeriesTooShort, "cumulative correlation needs n >= 3");
  std::vector<CorrelationPoint> points;
  points.reserve(static_cast<std::size_t>(n - 1));
  for (Eigen::Index k = 2; k <= n; ++k) {
    CorrelationPoint p;
    p.date = aligned.dates[static_cast<std::size_t>(k - 1)];
    p.r = try_pearson(aligned.news_values.head(k), aligned.rate_values.head(k));
    if (k >= 3) {
      p.critical_r = critical_r(static_cast<int>(k - 2), alpha, tail);
      p.significant = p.r && is_significant(*p.r, *p.critical_r, tail);
    }
    points.push_back(p);
  }
  return points;
}

WindowCorrelationSeries window_correlation(const AlignedSeries& aligned, int window_len,
                                           int step, double alpha, stats::Tail tail) {
  if (window_len < 3) throw Error(ErrorCode::InvalidArgument, "window_len must be >= 3");
  if (step < 1) throw Error(ErrorCode::InvalidArgument, "step must be >= 1");
  const auto n = aligned.size();
  if (n < window_len) {
    throw Error(ErrorCode::SeriesTooShort, "series of " + std::to_string(n) +
                                               " shorter than window " + std::to_string(window_len));
  }
  WindowCorrelationSeries wc;
  wc.window_len = window_len;
  wc.step = step;
  wc.alpha = alpha;
  wc.tail = tail;
  wc.critical_r = critical_r(window_len - 2, alpha, tail);
  wc.dates = aligned.dates;
  for (Eigen::Index start = 0; start + window_len <= n; start += step) {
    CorrelationPoint p;
    p.date = aligned.dates[static_cast<std::size_t>(start + window_len - 1)];
    p.r = try_pearson(aligned.news_values.segment(start, window_len),
                      aligned.rate_values.segment(start, window_len));
    p.critical_r = wc.critical_r;
    p.significant = p.r && is_significant(*p.r, wc.critical_r, tail);
    wc.first.push_back(start);
    wc.points.push_back(p);
  }
  return wc;
}

std::string correlation_points_csv(const std::vector<CorrelationPoint>& points) {
  csv::Writer out({"date", "r", "significant", "critical_r"});
  for (const auto& p : points) {
    out.write_row({to_iso(p.date), p.r ? csv::format_double(*p.r) : "NA",
                   p.significant ? "1" : "0",
                   p.critical_r ? csv::format_double(*p.critical_r) : "NA"});
  }
  return out.str();
}

}  // namespace eventlens
