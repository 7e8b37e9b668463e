#include <gtest/gtest.h>

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <random>

#include "eventlens/correlation.hpp"
#include "eventlens/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace eventlens;

namespace {

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

AlignedSeries make_aligned(const Eigen::VectorXd& news, const Eigen::VectorXd& rate) {
  AlignedSeries a;
  a.dates = testing_support::weekdays(Date::from_ymd(2016, 1, 4), static_cast<int>(news.size()));
  a.news_values = news;
  a.rate_values = rate;
  return a;
}

Eigen::VectorXd noise(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  return v;
}

}  // namespace

TEST(Pearson, Examples) {
  EXPECT_DOUBLE_EQ(pearson(Eigen::Vector3d(1, 2, 3), Eigen::Vector3d(1, 2, 3)), 1.0);
  EXPECT_DOUBLE_EQ(pearson(Eigen::Vector3d(1, 2, 3), Eigen::Vector3d(3, 2, 1)), -1.0);
  // 2.5 / sqrt(2 * 14/3) = 0.981980506061965...
  EXPECT_NEAR(pearson(Eigen::Vector3d(1, 2, 3), Eigen::Vector3d(1, 2, 4)), 0.9819805060619657, 1e-15);
}

TEST(Pearson, Errors) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code([] { pearson(Eigen::VectorXd(Eigen::Vector3d(1, 2, 3)), Eigen::VectorXd(Eigen::Vector2d(1, 2))); }),
            ErrorCode::LengthMismatch);
  EXPECT_EQ(code([] { pearson(Eigen::Vector3d(1, 2, 3), Eigen::Vector3d(5, 5, 5)); }), ErrorCode::ZeroVariance);
  EXPECT_EQ(code([] { pearson(Eigen::VectorXd::Ones(1), Eigen::VectorXd::Ones(1)); }), ErrorCode::SeriesTooShort);
  EXPECT_FALSE(try_pearson(Eigen::Vector3d(2, 2, 2), Eigen::Vector3d(1, 2, 3)).has_value());
}

TEST(Pearson, WorksOnFloatAndBlocks) {
  Eigen::VectorXf x(4), y(4);
  x << 1, 2, 3, 4;
  y << 2, 4, 6, 8.5;
  EXPECT_NEAR(pearson(x, y), 0.99846, 1e-4f);
  Eigen::VectorXd v = noise(20, 1);
  Eigen::VectorXd w = noise(20, 2);
  EXPECT_DOUBLE_EQ(pearson(v.segment(3, 11), w.segment(3, 11)),
                   pearson(Eigen::VectorXd(v.segment(3, 11)), Eigen::VectorXd(w.segment(3, 11))));
}

TEST(Pearson, AffineInvarianceAndSymmetry) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto x = noise(100, seed);
    const Eigen::VectorXd y = noise(100, seed + 1000) + 0.3 * x;
    const double r = pearson(x, y);
    EXPECT_LE(std::fabs(r), 1.0);
    EXPECT_EQ(pearson(y, x), r);
    // |b| / a stays small enough that forming a*x + b keeps 1e-12 of x.
    for (double a : {0.01, 2.5, 1e4}) {
      for (double b : {-7.0, 0.0, 30.0}) {
        const Eigen::VectorXd ax = (a * x.array() + b).matrix();
        const Eigen::VectorXd nx = (-a * x.array() + b).matrix();
        EXPECT_NEAR(pearson(ax, y), r, 1e-12);
        EXPECT_NEAR(pearson(nx, y), -r, 1e-12);
      }
    }
    EXPECT_NEAR(*oracle::pearson(to_std(x), to_std(y)), r, 1e-12);
  }
}

TEST(CriticalR, NineDfThresholdAndLimits) {
  EXPECT_NEAR(critical_r(9, 0.05), 0.602, 0.001);
  const double tt = boost::math::quantile(boost::math::students_t(9), 0.75);
  EXPECT_NEAR(critical_r(9, 0.5), tt / std::sqrt(tt * tt + 9), 1e-9);
  EXPECT_NEAR(critical_r(9, 0.5), 0.2281, 2e-4);  // t-table: t(0.75, 9) = 0.703
  for (int df : {1000, 100000}) {
    EXPECT_NEAR(critical_r(df, 0.05) * std::sqrt(df), 1.959964, 2e-3);
  }
}

TEST(CriticalR, MonotoneInAlpha) {
  double previous = 1.0;
  for (double alpha : {0.001, 0.01, 0.05, 0.1, 0.2, 0.5, 0.9}) {
    const double r = critical_r(9, alpha);
    EXPECT_LT(r, previous);
    previous = r;
  }
}

TEST(OverallCorrelation, IdenticalColumnsAndExactLinear) {
  const auto dates = testing_support::weekdays(Date::from_ymd(2016, 1, 4), 30);
  const Eigen::VectorXd level = testing_support::random_walk(30, 4);
  std::vector<int> mentions(30), articles(30);
  for (int i = 0; i < 30; ++i) {
    mentions[i] = 100 - 2 * i;
    articles[i] = 1 + (i * 7) % 5;
  }
  // A rate whose level is an exact affine function of mentions.
  Eigen::VectorXd linear_level(30);
  for (int i = 0; i < 30; ++i) linear_level[i] = 1.5 + 0.001 * i;
  const auto news = testing_support::make_news(dates, articles, mentions);
  const auto table = overall_correlation(news, testing_support::make_rates(dates, linear_level));
  EXPECT_NEAR(table(0, 0), -1.0, 1e-12);

  // Oracle: each cell equals pearson on the aligned pair.
  const auto rate = testing_support::make_rates(dates, level);
  const auto full = overall_correlation(news, rate);
  const RateMode modes[] = {RateMode::Level, RateMode::Pct, RateMode::AbsPct};
  const NewsMetric metrics[] = {NewsMetric::Mentions, NewsMetric::Articles};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto a = align(news, rate, metrics[j], modes[i]);
      EXPECT_NEAR(full(i, j), *oracle::pearson(to_std(a.news_values), to_std(a.rate_values)), 1e-12);
    }
  }
}

TEST(OverallCorrelation, NewsEqualsRateGivesOnes) {
  const auto dates = testing_support::weekdays(Date::from_ymd(2016, 1, 4), 12);
  std::vector<int> counts{3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8};
  Eigen::VectorXd level(12);
  for (int i = 0; i < 12; ++i) level[i] = counts[static_cast<std::size_t>(i)];
  const auto table = overall_correlation(testing_support::make_news(dates, counts, counts),
                                         testing_support::make_rates(dates, level));
  EXPECT_NEAR(table(0, 0), 1.0, 1e-12);
  EXPECT_NEAR(table(0, 1), 1.0, 1e-12);
}

TEST(CumulativeCorrelation, FinalPointAndUndefinedPrefix) {
  Eigen::VectorXd x(6), y(6);
  x << 2, 2, 3, 1, 5, 4;
  y << 1, 3, 2, 2, 6, 3;
  const auto points = cumulative_correlation(make_aligned(x, y));
  ASSERT_EQ(points.size(), 5u);
  EXPECT_FALSE(points[0].r.has_value());  // the first two x values are equal
  EXPECT_FALSE(points[0].significant);
  EXPECT_FALSE(points[0].critical_r.has_value());  // df = 0
  EXPECT_NEAR(*points.back().r, pearson(x, y), 1e-15);
  for (std::size_t k = 1; k < points.size(); ++k) {
    EXPECT_NEAR(*points[k].r, *oracle::pearson(to_std(x.head(static_cast<Eigen::Index>(k) + 2)), to_std(y.head(static_cast<Eigen::Index>(k) + 2))), 1e-12);
  }
}

TEST(CumulativeCorrelation, LinearFixtureAllOnes) {
  const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(40, 0, 39);
  const Eigen::VectorXd y = (3.0 * x.array() + 1).matrix();
  for (const auto& p : cumulative_correlation(make_aligned(x, y))) {
    ASSERT_TRUE(p.r.has_value());
    EXPECT_NEAR(*p.r, 1.0, 1e-12);
  }
  EXPECT_THROW(cumulative_correlation(make_aligned(x.head(2), y.head(2))), Error);
}

TEST(WindowCorrelation, ElevenDayThreshold) {
  const auto wc = window_correlation(make_aligned(noise(40, 1), noise(40, 2)));
  EXPECT_EQ(wc.window_len, 11);
  EXPECT_NEAR(wc.critical_r, 0.602, 0.001);
  EXPECT_EQ(wc.points.size(), 30u);
  EXPECT_EQ(wc.points.front().date, wc.dates[10]);
}

TEST(WindowCorrelation, ConstantRatesNeverSignificant) {
  const auto wc = window_correlation(make_aligned(noise(50, 1), Eigen::VectorXd::Constant(50, 1.2)));
  for (const auto& p : wc.points) {
    EXPECT_FALSE(p.r.has_value());
    EXPECT_FALSE(p.significant);
  }
}

TEST(WindowCorrelation, PlantedSegmentAmidZeros) {
  const int n = 60, start = 25;
  Eigen::VectorXd news = Eigen::VectorXd::Zero(n), rate = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < 11; ++i) {
    news[start + i] = i + 1;
    rate[start + i] = 2.0 * (i + 1);
  }
  const auto wc = window_correlation(make_aligned(news, rate));
  const double threshold = critical_r(9, 0.05);
  for (std::size_t w = 0; w < wc.points.size(); ++w) {
    const auto first = static_cast<int>(wc.first[w]);
    const auto r = oracle::pearson(to_std(news.segment(first, 11)), to_std(rate.segment(first, 11)));
    const bool expect = r && std::fabs(*r) >= threshold;
    EXPECT_EQ(wc.points[w].significant, expect) << w;
    EXPECT_EQ(wc.points[w].r.has_value(), r.has_value());
  }
  EXPECT_TRUE(wc.points[static_cast<std::size_t>(start)].significant);  // the window equal to the segment
  EXPECT_NEAR(*wc.points[static_cast<std::size_t>(start)].r, 1.0, 1e-12);
  EXPECT_FALSE(wc.points[0].significant);  // all-zero window
}

TEST(WindowCorrelation, StepAndMonotoneAlpha) {
  const auto a = make_aligned(noise(100, 5), noise(100, 6) + 0.5 * noise(100, 5));
  const auto stepped = window_correlation(a, 11, 3);
  const auto dense = window_correlation(a, 11, 1);
  ASSERT_EQ(stepped.points.size(), 30u);
  for (std::size_t i = 0; i < stepped.points.size(); ++i) {
    EXPECT_EQ(stepped.points[i].date, dense.points[3 * i].date);
    EXPECT_EQ(*stepped.points[i].r, *dense.points[3 * i].r);
  }
  const auto strict = window_correlation(a, 11, 1, 0.01);
  const auto loose = window_correlation(a, 11, 1, 0.10);
  for (std::size_t i = 0; i < dense.points.size(); ++i) {
    if (strict.points[i].significant) EXPECT_TRUE(dense.points[i].significant);
    if (dense.points[i].significant) EXPECT_TRUE(loose.points[i].significant);
  }
  EXPECT_THROW(window_correlation(make_aligned(noise(10, 1), noise(10, 2))), Error);
}

TEST(WindowCorrelation, UpperTail) {
  const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(11, 0, 10);
  const Eigen::VectorXd y = -x;
  EXPECT_TRUE(window_correlation(make_aligned(x, y), 11, 1, 0.05, stats::Tail::Two).points[0].significant);
  EXPECT_FALSE(window_correlation(make_aligned(x, y), 11, 1, 0.05, stats::Tail::Upper).points[0].significant);
}

TEST(CorrelationCsv, Format) {
  std::vector<CorrelationPoint> pts{{Date::from_ymd(2016, 6, 24), 0.5, false, 0.602},
                                    {Date::from_ymd(2016, 6, 27), std::nullopt, false, 0.602}};
  EXPECT_EQ(correlation_points_csv(pts),
            "date,r,significant,critical_r\n2016-06-24,0.5,0,0.602\n2016-06-27,NA,0,0.602\n");
}
