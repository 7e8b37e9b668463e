#pragma once

#include <Eigen/Core>
#include <random>
#include <vector>

#include "eventlens/corpus.hpp"
#include "eventlens/date.hpp"
#include "eventlens/timeseries.hpp"
#include "support.hpp"

namespace fixtures {

/// 250 weekdays of background news and a rate random walk, with three
/// planted episodes: an 11-day stretch where the rate tracks mentions
/// exactly and a single-day article spike in the middle.
struct DetectionFixture {
  eventlens::DailyNewsSeries news;
  eventlens::RateSeries rate;
  std::vector<eventlens::Date> spike_days;
};

inline DetectionFixture detection_fixture(std::uint64_t seed = 2016) {
  constexpr int n = 250;
  const auto dates = testing_support::weekdays(eventlens::Date::from_ymd(2016, 1, 4), n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> base(0, 3);
  std::normal_distribution<double> step(0.0, 0.004);

  std::vector<int> articles(n), mentions(n);
  for (int i = 0; i < n; ++i) {
    articles[i] = base(rng);
    mentions[i] = articles[i] * 2 + base(rng);
  }
  Eigen::VectorXd level(n);
  level[0] = 1.30;
  for (int i = 1; i < n; ++i) level[i] = level[i - 1] * (1.0 + step(rng));

  DetectionFixture f;
  for (int start : {40, 120, 200}) {
    for (int k = 0; k < 11; ++k) {
      const int i = start + k;
      mentions[i] = 5 + 3 * k + (k == 5 ? 20 : 0);
      articles[i] = k == 5 ? 25 : 1;
      level[i] = 1.25 - 0.001 * mentions[i];
    }
    f.spike_days.push_back(dates[static_cast<std::size_t>(start + 5)]);
  }
  f.news = testing_support::make_news(dates, articles, mentions);
  f.rate = testing_support::make_rates(dates, level);
  return f;
}

/// 200 weekdays of levels from a random walk; events can be placed from
/// index T+h+1 on.
inline eventlens::RateSeries study_fixture(std::uint64_t seed = 7, int n = 200) {
  return testing_support::make_rates(testing_support::weekdays(eventlens::Date::from_ymd(2017, 1, 2), n),
                                     testing_support::random_walk(n, seed, 1.15, 0.005));
}

/// Two disjoint vocabularies; docs 0..9 draw from A, 10..19 from B.
struct PlantedCorpus {
  std::vector<eventlens::Tokens> docs;
  std::vector<std::string> vocab_a;
  std::vector<std::string> vocab_b;
};

inline PlantedCorpus planted_corpus(std::uint64_t seed = 3) {
  PlantedCorpus c;
  for (int i = 0; i < 25; ++i) {
    c.vocab_a.push_back("alpha" + std::to_string(i));
    c.vocab_b.push_back("beta" + std::to_string(i));
  }
  std::mt19937_64 rng(seed);
  for (int d = 0; d < 20; ++d) {
    const auto& vocab = d < 10 ? c.vocab_a : c.vocab_b;
    eventlens::Tokens doc;
    for (int t = 0; t < 50; ++t) doc.push_back(vocab[rng() % vocab.size()]);
    c.docs.push_back(std::move(doc));
  }
  return c;
}

}  // namespace fixtures
