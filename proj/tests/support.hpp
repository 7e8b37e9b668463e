#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "eventlens/corpus.hpp"
#include "eventlens/date.hpp"
#include "eventlens/timeseries.hpp"

namespace testing_support {

inline std::string data_path(const std::string& name) { return std::string(EVENTLENS_DATA_DIR) + "/" + name; }
inline std::string test_data_path(const std::string& name) {
  return std::string(EVENTLENS_TEST_DATA_DIR) + "/" + name;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("eventlens_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

/// n consecutive weekdays starting at (or after) `start`.
inline std::vector<eventlens::Date> weekdays(eventlens::Date start, int n) {
  std::vector<eventlens::Date> out;
  for (auto d = start; static_cast<int>(out.size()) < n; d = d + 1) {
    if (!d.is_weekend()) out.push_back(d);
  }
  return out;
}

inline eventlens::RateSeries make_rates(const std::vector<eventlens::Date>& dates,
                                        const Eigen::VectorXd& levels, const std::string& pair = "GBP/EUR") {
  eventlens::RateSeries s;
  s.pair = pair;
  s.dates = dates;
  s.values = levels;
  return s;
}

/// Geometric random walk with N(0, sigma) simple returns.
inline Eigen::VectorXd random_walk(int n, std::uint64_t seed, double start = 1.2, double sigma = 0.006) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> step(0.0, sigma);
  Eigen::VectorXd v(n);
  v(0) = start;
  for (int i = 1; i < n; ++i) v(i) = v(i - 1) * (1.0 + step(rng));
  return v;
}

inline eventlens::DailyNewsSeries make_news(const std::vector<eventlens::Date>& dates,
                                            const std::vector<int>& articles,
                                            const std::vector<int>& mentions) {
  eventlens::DailyNewsSeries n;
  n.dates = dates;
  n.article_count = Eigen::Map<const Eigen::VectorXi>(articles.data(), static_cast<Eigen::Index>(articles.size()));
  n.mention_count = Eigen::Map<const Eigen::VectorXi>(mentions.data(), static_cast<Eigen::Index>(mentions.size()));
  return n;
}

}  // namespace testing_support
