#pragma once

// Brute-force reference implementations. They deliberately avoid the library
// kernels: plain loops over std::vector, long double accumulators, and
// Boost.Math for Student-t quantiles.

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "eventlens/date.hpp"

namespace oracle {

inline std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  bool x_const = true, y_const = true;
  for (std::size_t i = 1; i < n; ++i) {
    x_const = x_const && x[i] == x[0];
    y_const = y_const && y[i] == y[0];
  }
  if (x_const || y_const) return std::nullopt;
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

inline double critical_t_two_sided(double df, double alpha) {
  return boost::math::quantile(boost::math::students_t(df), 1.0 - alpha / 2.0);
}

inline double critical_r_two_sided(int df, double alpha) {
  const double t = critical_t_two_sided(df, alpha);
  return t / std::sqrt(t * t + df);
}

struct WindowR {
  std::size_t first;
  std::optional<double> r;
  bool significant;
};

inline std::vector<WindowR> windows(const std::vector<double>& x, const std::vector<double>& y,
                                    int len, double alpha) {
  const double crit = critical_r_two_sided(len - 2, alpha);
  std::vector<WindowR> out;
  for (std::size_t s = 0; s + static_cast<std::size_t>(len) <= x.size(); ++s) {
    std::vector<double> wx(x.begin() + s, x.begin() + s + len);
    std::vector<double> wy(y.begin() + s, y.begin() + s + len);
    const auto r = pearson(wx, wy);
    out.push_back({s, r, r && std::fabs(*r) >= crit});
  }
  return out;
}

inline long weekday_gap(eventlens::Date a, eventlens::Date b) {
  long n = 0;
  for (auto d = a + 1; d <= b; d = d + 1) n += d.is_weekend() ? 0 : 1;
  return n;
}

struct Event {
  eventlens::Date date;
  int articles;
  std::optional<double> r;
};

/// Significant windows -> covered days -> above-mean article days -> one
/// representative per chain of days no more than `len` weekdays apart.
inline std::vector<Event> window_events(const std::vector<eventlens::Date>& dates,
                                        const std::vector<double>& news_metric,
                                        const std::vector<double>& rate,
                                        const std::vector<int>& articles, int len, double alpha) {
  std::map<std::size_t, double> covered;
  for (const auto& w : windows(news_metric, rate, len, alpha)) {
    if (!w.significant) continue;
    for (std::size_t k = w.first; k < w.first + static_cast<std::size_t>(len); ++k) {
      auto it = covered.find(k);
      if (it == covered.end() || std::fabs(*w.r) > std::fabs(it->second)) covered[k] = *w.r;
    }
  }
  long double total = 0;
  for (int a : articles) total += a;
  const long double mean = total / articles.size();

  std::vector<Event> survivors;
  for (const auto& [idx, r] : covered) {
    if (articles[idx] > mean) survivors.push_back({dates[idx], articles[idx], r});
  }
  std::vector<Event> out;
  for (std::size_t i = 0; i < survivors.size();) {
    std::size_t j = i;
    while (j + 1 < survivors.size() && weekday_gap(survivors[j].date, survivors[j + 1].date) <= len) ++j;
    Event best = survivors[i];
    for (std::size_t k = i; k <= j; ++k) {
      if (survivors[k].articles > best.articles) best = survivors[k];
    }
    out.push_back(best);
    i = j + 1;
  }
  return out;
}

/// Sort descending, take ceil(q*N) with q = q_num / q_den in exact integer
/// arithmetic, include every day tied with the last one taken.
inline std::vector<eventlens::Date> top_quantile(const std::vector<eventlens::Date>& dates,
                                                 const std::vector<int>& articles, long q_num,
                                                 long q_den) {
  const long n = static_cast<long>(articles.size());
  const long take = std::max(1L, (q_num * n + q_den - 1) / q_den);
  std::vector<int> sorted = articles;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const int threshold = sorted[static_cast<std::size_t>(take - 1)];
  std::vector<eventlens::Date> out;
  for (std::size_t i = 0; i < articles.size(); ++i) {
    if (articles[i] >= threshold) out.push_back(dates[i]);
  }
  return out;
}

struct StudyRow {
  int rel;
  double level, ret, ar, t;
  bool significant;
};

struct Study {
  double mean, s_ar;
  std::vector<double> estimation_ar;
  std::vector<StudyRow> rows;
};

/// Mean-adjusted event study straight from levels; `e` is the event's index
/// in `levels`, the estimation window is the T returns ending at e-h-1.
inline Study event_study(const std::vector<double>& levels, std::size_t e, int T, int h, double alpha) {
  auto ret = [&](std::size_t i) { return (levels[i] - levels[i - 1]) / levels[i - 1]; };
  Study s{};
  long double sum = 0;
  for (std::size_t i = e - h - T; i <= e - h - 1; ++i) sum += ret(i);
  s.mean = static_cast<double>(sum / T);
  long double ss = 0;
  for (std::size_t i = e - h - T; i <= e - h - 1; ++i) {
    const double ar = ret(i) - s.mean;
    s.estimation_ar.push_back(ar);
    ss += static_cast<long double>(ar) * ar;
  }
  s.s_ar = static_cast<double>(std::sqrt(ss / (T - 2)));
  const double crit = critical_t_two_sided(T - 2, alpha);
  for (int rel = -h; rel <= h; ++rel) {
    const std::size_t i = e + rel;
    if (i >= levels.size()) break;
    const double ar = ret(i) - s.mean;
    const double t = ar / s.s_ar;
    s.rows.push_back({rel, levels[i], ret(i), ar, t, std::fabs(t) >= crit});
  }
  return s;
}

}  // namespace oracle
