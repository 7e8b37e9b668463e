#include "eventlens/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "eventlens/csv.hpp"
#include "eventlens/error.hpp"

namespace eventlens {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_ascii_punct(unsigned char c) {
  return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) ||
         (c >= 0x7B && c <= 0x7E);
}

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

Tokens split_whitespace(std::string_view text) {
  Tokens out;
  std::string current;
  for (char c : text) {
    if (is_space(static_cast<unsigned char>(c))) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

}  // namespace

Date extract_date_from_url(std::string_view url) {
  std::size_t pos = 0;
  while ((pos = url.find('/', pos)) != std::string_view::npos) {
    const std::size_t end = url.find('/', pos + 1);
    if (end == std::string_view::npos) break;
    const auto segment = url.substr(pos + 1, end - pos - 1);
    if (segment.size() == 8 && std::all_of(segment.begin(), segment.end(), is_digit)) {
      const auto num = [&](std::size_t off, std::size_t len) {
        int v = 0;
        for (char c : segment.substr(off, len)) v = v * 10 + (c - '0');
        return v;
      };
      try {
        return Date::from_ymd(num(0, 4), static_cast<unsigned>(num(4, 2)),
                              static_cast<unsigned>(num(6, 2)));
      } catch (const Error&) {
        throw Error(ErrorCode::MalformedUrl,
                    "segment '" + std::string(segment) + "' is not a valid date in " + std::string(url));
      }
    }
    pos = end;
  }
  throw Error(ErrorCode::MalformedUrl, "no YYYYMMDD path segment in " + std::string(url));
}

std::string trim_article(std::string_view raw, std::span<const std::string> markers) {
  std::size_t cut = raw.size();
  for (const auto& marker : markers) {
    if (marker.empty()) continue;
    cut = std::min(cut, raw.find(marker));
  }
  return std::string(raw.substr(0, cut));
}

Tokens clean_string(std::string_view raw) {
  std::string cleaned;
  cleaned.reserve(raw.size());
  for (char ch : raw) {
    const auto c = static_cast<unsigned char>(ch);
    if (c >= 0x80 || is_ascii_punct(c)) continue;
    cleaned.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c + ('a' - 'A') : c));
  }
  return split_whitespace(cleaned);
}

Tokens remove_stopwords(const Tokens& tokens, const StopwordSet& stopwords) {
  Tokens out;
  out.reserve(tokens.size());
  std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(out),
               [&](const std::string& t) { return !stopwords.contains(t); });
  return out;
}

Tokens remove_numbers(const Tokens& tokens) {
  Tokens out;
  out.reserve(tokens.size());
  std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(out), [](const std::string& t) {
    return !std::all_of(t.begin(), t.end(), is_digit);
  });
  return out;
}

Tokens preprocess(std::string_view raw, const StopwordSet& stopwords,
                  std::span<const std::string> markers) {
  return remove_numbers(remove_stopwords(clean_string(trim_article(raw, markers)), stopwords));
}

StopwordSet load_stopwords(const std::string& path) {
  std::istringstream in(csv::read_text_file(path));
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    words.insert(tokens.front());
  }
  return words;
}

std::vector<Article> load_news_csv(const std::string& path, const StopwordSet& stopwords,
                                   const NewsLoadOptions& options) {
  const auto table = csv::read_file(path);
  const auto date_col = table.require_column("Date");
  const auto article_col = table.require_column("Article");
  const auto tokens_col = table.require_column("Tokens");
  const auto source_col = table.require_column("Source");
  const auto width = std::max({date_col, article_col, tokens_col, source_col}) + 1;

  std::vector<Article> corpus;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    if (row.size() < width) {
      throw Error(ErrorCode::UnparseableRow,
                  path + " line " + std::to_string(table.lines[i]) + ": too few fields");
    }
    Article article;
    try {
      article.date = parse_date(row[date_col]);
    } catch (const Error& e) {
      throw Error(ErrorCode::UnparseableRow,
                  path + " line " + std::to_string(table.lines[i]) + ": " + e.what());
    }
    if (!options.study_range.contains(article.date)) continue;
    article.raw_text = row[article_col];
    article.source = row[source_col];
    if (split_whitespace(row[tokens_col]).empty()) {
      article.tokens = preprocess(article.raw_text, stopwords, options.boilerplate_markers);
    } else {
      // Stored tokens are re-normalised so the Article invariants always hold.
      article.tokens = remove_numbers(remove_stopwords(clean_string(row[tokens_col]), stopwords));
    }
    corpus.push_back(std::move(article));
  }
  std::stable_sort(corpus.begin(), corpus.end(),
                   [](const Article& a, const Article& b) { return a.date < b.date; });
  return corpus;
}

int count_mentions(const Article& article, std::string_view term, MentionMode mode) {
  if (term.empty()) return 0;
  if (mode == MentionMode::Token) {
    return static_cast<int>(std::count(article.tokens.begin(), article.tokens.end(), term));
  }
  std::string lowered = article.raw_text;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(), [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + ('a' - 'A')) : c;
  });
  int count = 0;
  for (std::size_t pos = lowered.find(term); pos != std::string::npos;
       pos = lowered.find(term, pos + term.size())) {
    ++count;
  }
  return count;
}

DailyNewsSeries aggregate_daily(std::span<const Article> corpus, std::string_view term,
                                const DateRange& range, MentionMode mode) {
  if (range.empty()) {
    throw Error(ErrorCode::EmptyRange, to_iso(range.first) + " .. " + to_iso(range.last));
  }
  const auto n = static_cast<Eigen::Index>(range.size());
  DailyNewsSeries news;
  news.dates.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) news.dates.push_back(range.first + static_cast<int>(i));
  news.article_count = Eigen::VectorXi::Zero(n);
  news.mention_count = Eigen::VectorXi::Zero(n);
  for (const auto& article : corpus) {
    if (!range.contains(article.date)) continue;
    const auto idx = static_cast<Eigen::Index>(article.date - range.first);
    news.article_count[idx] += 1;
    news.mention_count[idx] += count_mentions(article, term, mode);
  }
  return news;
}

std::string daily_news_csv(const DailyNewsSeries& news) {
  csv::Writer out({"date", "article_count", "mention_count"});
  for (Eigen::Index i = 0; i < news.size(); ++i) {
    out.write_row({to_iso(news.dates[static_cast<std::size_t>(i)]),
                   std::to_string(news.article_count[i]), std::to_string(news.mention_count[i])});
  }
  return out.str();
}

}  // namespace eventlens
