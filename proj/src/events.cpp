#include "eventlens/events.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "eventlens/csv.hpp"

namespace eventlens {

std::string_view to_string(DetectionMethod method) {
  switch (method) {
    case DetectionMethod::WindowCorrelation: return "window_correlation";
    case DetectionMethod::TopQuantile: return "top_quantile";
    case DetectionMethod::Configured: return "configured";
  }
  return "unknown";
}

std::vector<EventDate> cluster_collapse(const std::vector<EventDate>& dates, int span) {
  std::vector<EventDate> out;
  if (dates.empty()) return out;
  EventDate best = dates.front();
  Date previous = dates.front().date;
  for (std::size_t i = 1; i < dates.size(); ++i) {
    const auto& d = dates[i];
    if (weekdays_between(previous, d.date) <= span) {
      if (d.article_count > best.article_count) best = d;
    } else {
      out.push_back(best);
      best = d;
    }
    previous = d.date;
  }
  out.push_back(best);
  return out;
}

std::vector<EventDate> detect_window_events(const WindowCorrelationSeries& wc,
                                            const DailyNewsSeries& news) {
  if (news.size() == 0) return {};
  const double mean_articles = news.article_count.cast<double>().mean();

  // Step 1: every date covered by a significant window, with the largest |r|.
  std::map<Date, double> covered;
  for (std::size_t w = 0; w < wc.points.size(); ++w) {
    const auto& p = wc.points[w];
    if (!p.significant) continue;
    for (int k = 0; k < wc.window_len; ++k) {
      const Date d = wc.dates[static_cast<std::size_t>(wc.first[w] + k)];
      auto [it, inserted] = covered.emplace(d, *p.r);
      if (!inserted && std::fabs(*p.r) > std::fabs(it->second)) it->second = *p.r;
    }
  }

  // Step 2: above-average article days only.
  std::vector<EventDate> kept;
  for (const auto& [date, r] : covered) {
    const auto it = std::lower_bound(news.dates.begin(), news.dates.end(), date);
    if (it == news.dates.end() || *it != date) continue;
    const auto idx = static_cast<Eigen::Index>(it - news.dates.begin());
    if (!(news.article_count[idx] > mean_articles)) continue;
    kept.push_back({date, DetectionMethod::WindowCorrelation, r, news.article_count[idx],
                    news.mention_count[idx]});
  }

  // Step 3: one representative per cluster.
  return cluster_collapse(kept, wc.window_len);
}

std::vector<EventDate> detect_top_quantile_events(const DailyNewsSeries& news, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "quantile q must lie in (0,1)");
  }
  const auto n = news.size();
  if (n == 0) return {};
  // Guard against q*N landing a hair above an integer (0.05 * 100).
  const auto take = std::clamp<Eigen::Index>(
      static_cast<Eigen::Index>(std::ceil(q * static_cast<double>(n) - 1e-9)), 1, n);
  std::vector<int> sorted(news.article_count.data(), news.article_count.data() + n);
  std::nth_element(sorted.begin(), sorted.begin() + (take - 1), sorted.end(), std::greater<>());
  const int threshold = sorted[static_cast<std::size_t>(take - 1)];

  std::vector<EventDate> out;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (news.article_count[i] >= threshold) {
      out.push_back({news.dates[static_cast<std::size_t>(i)], DetectionMethod::TopQuantile,
                     std::nullopt, news.article_count[i], news.mention_count[i]});
    }
  }
  return out;
}

std::string events_csv(const std::vector<EventDate>& events) {
  csv::Writer out({"date", "method", "window_r", "article_count", "mention_count"});
  for (const auto& e : events) {
    out.write_row({to_iso(e.date), std::string(to_string(e.method)),
                   e.window_r ? csv::format_double(*e.window_r) : "",
                   std::to_string(e.article_count), std::to_string(e.mention_count)});
  }
  return out.str();
}

}  // namespace eventlens
