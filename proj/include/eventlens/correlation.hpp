#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "eventlens/error.hpp"
#include "eventlens/stats.hpp"
#include "eventlens/timeseries.hpp"

namespace eventlens {

namespace detail {

template <typename Derived>
bool is_constant(const Eigen::MatrixBase<Derived>& v) {
  return v.size() == 0 || v.maxCoeff() == v.minCoeff();
}

}  // namespace detail

/// Pearson r of two equal-length vectors, or nullopt when either side has
/// zero variance. Throws Error(LengthMismatch) / Error(SeriesTooShort).
template <typename DerivedX, typename DerivedY>
std::optional<typename DerivedX::Scalar> try_pearson(const Eigen::MatrixBase<DerivedX>& x,
                                                     const Eigen::MatrixBase<DerivedY>& y) {
  using Scalar = typename DerivedX::Scalar;
  if (x.size() != y.size()) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  if (x.size() < 2) throw Error(ErrorCode::SeriesTooShort, "pearson needs n >= 2");
  if (detail::is_constant(x) || detail::is_constant(y)) return std::nullopt;

  const auto xc = (x.array() - x.mean()).matrix();
  const auto yc = (y.array() - y.mean()).matrix();
  const Scalar sxx = xc.squaredNorm();
  const Scalar syy = yc.squaredNorm();
  if (sxx == Scalar(0) || syy == Scalar(0)) return std::nullopt;
  const Scalar r = xc.dot(yc) / (std::sqrt(sxx) * std::sqrt(syy));
  return std::clamp(r, Scalar(-1), Scalar(1));
}

/// As try_pearson but throws Error(ZeroVariance) when r is undefined.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar pearson(const Eigen::MatrixBase<DerivedX>& x,
                                  const Eigen::MatrixBase<DerivedY>& y) {
  if (auto r = try_pearson(x, y)) return *r;
  throw Error(ErrorCode::ZeroVariance, "correlation undefined for a constant series");
}

/// Smallest |r| significant at alpha with df degrees of freedom:
/// r* = t* / sqrt(t*^2 + df).
double critical_r(int df, double alpha, stats::Tail tail = stats::Tail::Two);

inline bool is_significant(double r, double critical, stats::Tail tail) {
  return tail == stats::Tail::Two ? std::fabs(r) >= critical : r >= critical;
}

struct CorrelationResult {
  double r = 0;
  Eigen::Index n = 0;
  Eigen::Index df = 0;
  double critical_r = 0;
  bool significant = false;
};

CorrelationResult correlation_test(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                   double alpha = 0.05, stats::Tail tail = stats::Tail::Two);

/// Rows: level, pct change, abs pct change. Columns: mentions, articles.
using CorrelationTable = Eigen::Matrix<double, 3, 2>;

/// Inputs are expected to be weekend-excluded already.
CorrelationTable overall_correlation(const DailyNewsSeries& news, const RateSeries& rate);
std::string correlation_table_csv(const CorrelationTable& table);

struct CorrelationPoint {
  Date date;
  std::optional<double> r;  // nullopt: zero-variance prefix/window
  bool significant = false;
  std::optional<double> critical_r;
};

/// r over every prefix of length 2..n, labelled by the prefix's last date.
/// Throws Error(SeriesTooShort) when n < 3.
std::vector<CorrelationPoint> cumulative_correlation(const AlignedSeries& aligned,
                                                     double alpha = 0.05,
                                                     stats::Tail tail = stats::Tail::Two);

struct WindowCorrelationSeries {
  int window_len = 11;
  int step = 1;
  double alpha = 0.05;
  stats::Tail tail = stats::Tail::Two;
  double critical_r = 0;
  std::vector<Date> dates;  // the aligned dates the windows run over
  std::vector<Eigen::Index> first;  // index of each window's first date
  std::vector<CorrelationPoint> points;  // labelled by window end date
};

/// Sliding windows of exactly window_len observations. Throws
/// Error(SeriesTooShort) when n < window_len.
WindowCorrelationSeries window_correlation(const AlignedSeries& aligned, int window_len = 11,
                                           int step = 1, double alpha = 0.05,
                                           stats::Tail tail = stats::Tail::Two);

/// date,r,significant,critical_r
std::string correlation_points_csv(const std::vector<CorrelationPoint>& points);

}  // namespace eventlens
