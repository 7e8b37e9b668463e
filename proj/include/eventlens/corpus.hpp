#pragma once

#include <Eigen/Core>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "eventlens/date.hpp"

namespace eventlens {

using Tokens = std::vector<std::string>;
using StopwordSet = std::unordered_set<std::string>;

struct Article {
  Date date;
  std::string raw_text;
  Tokens tokens;  // lowercase ASCII, no stopwords, no digit-only tokens
  std::string source;
};

/// Per-calendar-day article and term-mention counts, dates strictly increasing.
struct DailyNewsSeries {
  std::vector<Date> dates;
  Eigen::VectorXi article_count;
  Eigen::VectorXi mention_count;

  Eigen::Index size() const { return static_cast<Eigen::Index>(dates.size()); }
};

enum class MentionMode {
  Token,      // exact equality with cleaned tokens
  Substring,  // occurrences in the lowercased raw text
};

/// Date from the first 8-digit YYYYMMDD path segment, e.g.
/// ".../articles/view/20160625/local/x.html". Throws Error(MalformedUrl).
Date extract_date_from_url(std::string_view url);

/// Drops everything from the earliest occurrence of any marker onwards.
std::string trim_article(std::string_view raw, std::span<const std::string> markers);

/// Lowercase, strip non-ASCII bytes and ASCII punctuation, split on whitespace.
Tokens clean_string(std::string_view raw);

Tokens remove_stopwords(const Tokens& tokens, const StopwordSet& stopwords);

/// Removes tokens made only of digits; "eu27" survives.
Tokens remove_numbers(const Tokens& tokens);

/// trim -> clean -> stopwords -> numbers, always in that order.
Tokens preprocess(std::string_view raw, const StopwordSet& stopwords,
                  std::span<const std::string> markers);

/// Newline-delimited, one word per line; blank lines and '#' comments ignored.
StopwordSet load_stopwords(const std::string& path);

struct NewsLoadOptions {
  DateRange study_range;
  std::vector<std::string> boilerplate_markers;
};

/// Reads the Date,Article,Tokens,Source CSV. Rows with an empty Tokens cell
/// are preprocessed from Article; rows dated outside the study range are
/// dropped.
std::vector<Article> load_news_csv(const std::string& path, const StopwordSet& stopwords,
                                   const NewsLoadOptions& options);

int count_mentions(const Article& article, std::string_view term,
                   MentionMode mode = MentionMode::Token);

/// One entry per calendar day of range (weekends included). Throws
/// Error(EmptyRange).
DailyNewsSeries aggregate_daily(std::span<const Article> corpus, std::string_view term,
                                const DateRange& range, MentionMode mode = MentionMode::Token);

std::string daily_news_csv(const DailyNewsSeries& news);

}  // namespace eventlens
