#include "eventlens/timeseries.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "eventlens/csv.hpp"
#include "eventlens/error.hpp"

namespace eventlens {

namespace {

template <typename Series>
Series select(const Series& src, const std::vector<Eigen::Index>& keep) {
  Series out;
  out.pair = src.pair;
  out.values.resize(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.dates.push_back(src.dates[static_cast<std::size_t>(keep[i])]);
    out.values[static_cast<Eigen::Index>(i)] = src.values[keep[i]];
  }
  return out;
}

bool missing_cell(const std::string& cell) {
  const auto first = cell.find_first_not_of(" \t");
  if (first == std::string::npos) return true;
  const auto trimmed = cell.substr(first, cell.find_last_not_of(" \t") - first + 1);
  return trimmed == "NA" || trimmed == "N/A";
}

}  // namespace

std::string flip_pair(const std::string& pair) {
  const auto slash = pair.find('/');
  if (slash == std::string::npos) return pair + "^-1";
  return pair.substr(slash + 1) + "/" + pair.substr(0, slash);
}

RateSeries parse_rate_csv(const std::string& text, const std::string& value_column,
                          const std::string& pair, const std::string& origin) {
  const auto table = csv::parse(text);
  const auto date_col = table.require_column("Date");
  const auto value_col = table.require_column(value_column);

  std::vector<std::pair<Date, double>> points;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const auto where = origin + " row " + std::to_string(i + 1) + " (line " +
                       std::to_string(table.lines[i]) + ")";
    if (row.size() <= date_col) throw Error(ErrorCode::UnparseableRow, where + ": missing Date");
    if (row.size() <= value_col || missing_cell(row[value_col])) continue;
    Date date;
    try {
      date = parse_date(row[date_col]);
    } catch (const Error& e) {
      throw Error(ErrorCode::UnparseableRow, where + ": " + e.what());
    }
    const auto& cell = row[value_col];
    const auto first = cell.find_first_not_of(" \t");
    const auto last = cell.find_last_not_of(" \t");
    double value = 0;
    auto [ptr, ec] = std::from_chars(cell.data() + first, cell.data() + last + 1, value);
    if (ec != std::errc{} || ptr != cell.data() + last + 1 || !(value > 0)) {
      throw Error(ErrorCode::UnparseableRow, where + ": bad value '" + cell + "'");
    }
    points.emplace_back(date, value);
  }
  if (points.empty()) throw Error(ErrorCode::EmptySeries, origin + ": no valid rows");

  std::stable_sort(points.begin(), points.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].first == points[i - 1].first) {
      throw Error(ErrorCode::UnparseableRow, origin + ": duplicate date " + to_iso(points[i].first));
    }
  }

  RateSeries series;
  series.pair = pair.empty() ? value_column : pair;
  series.values.resize(static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    series.dates.push_back(points[i].first);
    series.values[static_cast<Eigen::Index>(i)] = points[i].second;
  }
  return series;
}

RateSeries load_rate_csv(const std::string& path, const std::string& value_column,
                         const std::string& pair) {
  return parse_rate_csv(csv::read_text_file(path), value_column, pair, path);
}

RateSeries exclude_weekends(const RateSeries& series) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < series.size(); ++i) {
    if (!series.dates[static_cast<std::size_t>(i)].is_weekend()) keep.push_back(i);
  }
  return select(series, keep);
}

DailyNewsSeries exclude_weekends(const DailyNewsSeries& news) {
  DailyNewsSeries out;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < news.size(); ++i) {
    if (!news.dates[static_cast<std::size_t>(i)].is_weekend()) keep.push_back(i);
  }
  const auto n = static_cast<Eigen::Index>(keep.size());
  out.article_count.resize(n);
  out.mention_count.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.dates.push_back(news.dates[static_cast<std::size_t>(keep[static_cast<std::size_t>(i)])]);
    out.article_count[i] = news.article_count[keep[static_cast<std::size_t>(i)]];
    out.mention_count[i] = news.mention_count[keep[static_cast<std::size_t>(i)]];
  }
  return out;
}

RateSeries carry_forward_weekends(const RateSeries& series) {
  std::vector<std::pair<Date, double>> points;
  for (Eigen::Index i = 0; i < series.size(); ++i) {
    const Date d = series.dates[static_cast<std::size_t>(i)];
    points.emplace_back(d, series.values[i]);
    if (d.weekday() != std::chrono::Friday) continue;
    for (const Date fill : {d + 1, d + 2}) {
      if (!std::binary_search(series.dates.begin(), series.dates.end(), fill)) {
        points.emplace_back(fill, series.values[i]);
      }
    }
  }
  std::sort(points.begin(), points.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  RateSeries out;
  out.pair = series.pair;
  out.values.resize(static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.dates.push_back(points[i].first);
    out.values[static_cast<Eigen::Index>(i)] = points[i].second;
  }
  return out;
}

ReturnSeries pct_change(const RateSeries& series) {
  const auto n = series.size();
  if (n < 2) {
    throw Error(ErrorCode::EmptySeries, series.pair + ": need at least 2 points for returns");
  }
  ReturnSeries out;
  out.pair = series.pair;
  out.dates.assign(series.dates.begin() + 1, series.dates.end());
  out.values = (series.values.tail(n - 1).array() - series.values.head(n - 1).array()) /
               series.values.head(n - 1).array();
  return out;
}

ReturnSeries abs_pct_change(const RateSeries& series) {
  auto out = pct_change(series);
  out.values = out.values.cwiseAbs();
  return out;
}

RateSeries invert(const RateSeries& series) {
  RateSeries out;
  out.pair = flip_pair(series.pair);
  out.dates = series.dates;
  out.values = series.values.cwiseInverse();
  return out;
}

RateSeries derive_cross_rate(const RateSeries& eur_usd, const RateSeries& eur_gbp) {
  RateSeries out;
  out.pair = "GBP/USD";
  std::vector<double> values;
  std::size_t j = 0;
  for (std::size_t i = 0; i < eur_usd.dates.size(); ++i) {
    while (j < eur_gbp.dates.size() && eur_gbp.dates[j] < eur_usd.dates[i]) ++j;
    if (j < eur_gbp.dates.size() && eur_gbp.dates[j] == eur_usd.dates[i]) {
      out.dates.push_back(eur_usd.dates[i]);
      values.push_back(eur_usd.values[static_cast<Eigen::Index>(i)] /
                       eur_gbp.values[static_cast<Eigen::Index>(j)]);
    }
  }
  if (values.empty()) {
    throw Error(ErrorCode::NoOverlap, eur_usd.pair + " and " + eur_gbp.pair + " share no dates");
  }
  out.values = Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  return out;
}

AlignedSeries align(const DailyNewsSeries& news, const DatedSeries& values, NewsMetric metric) {
  const Eigen::VectorXi& counts =
      metric == NewsMetric::Mentions ? news.mention_count : news.article_count;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> hits;
  std::size_t j = 0;
  for (std::size_t i = 0; i < news.dates.size(); ++i) {
    while (j < values.dates.size() && values.dates[j] < news.dates[i]) ++j;
    if (j < values.dates.size() && values.dates[j] == news.dates[i]) {
      hits.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  if (hits.size() < 2) {
    throw Error(ErrorCode::InsufficientOverlap,
                "news and " + values.pair + " share " + std::to_string(hits.size()) + " dates");
  }
  AlignedSeries out;
  const auto n = static_cast<Eigen::Index>(hits.size());
  out.news_values.resize(n);
  out.rate_values.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto [i, jj] = hits[static_cast<std::size_t>(k)];
    out.dates.push_back(news.dates[static_cast<std::size_t>(i)]);
    out.news_values[k] = counts[i];
    out.rate_values[k] = values.values[jj];
  }
  return out;
}

AlignedSeries align(const DailyNewsSeries& news, const RateSeries& rate, NewsMetric metric,
                    RateMode mode) {
  switch (mode) {
    case RateMode::Level: return align(news, static_cast<const DatedSeries&>(rate), metric);
    case RateMode::Pct: return align(news, pct_change(rate), metric);
    case RateMode::AbsPct: return align(news, abs_pct_change(rate), metric);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown rate mode");
}

std::string series_csv(const DatedSeries& series) {
  csv::Writer out({"Date", "Value"});
  for (Eigen::Index i = 0; i < series.size(); ++i) {
    out.write_row({to_iso(series.dates[static_cast<std::size_t>(i)]),
                   csv::format_double(series.values[i])});
  }
  return out.str();
}

}  // namespace eventlens
