#pragma once

#include <Eigen/Core>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eventlens/events.hpp"
#include "eventlens/timeseries.hpp"

namespace eventlens {

/// Mean-adjusted abnormal returns: AR = R - expected.
template <typename Derived>
auto abnormal_returns(const Eigen::MatrixBase<Derived>& returns,
                      typename Derived::Scalar expected) {
  return (returns.array() - expected).matrix();
}

/// s_AR from a block of abnormal returns: sqrt(sum(AR^2) / (n - 2)).
template <typename Derived>
typename Derived::Scalar abnormal_return_scale(const Eigen::MatrixBase<Derived>& ar) {
  using Scalar = typename Derived::Scalar;
  return std::sqrt(ar.squaredNorm() / Scalar(ar.size() - 2));
}

enum class VarianceWindow {
  Estimation,  // s_AR from the estimation-window ARs (default)
  Event,       // s_AR from the event-window ARs
};

struct EventStudyConfig {
  int estimation_len = 150;
  int event_half_width = 5;
  double alpha = 0.10;
  VarianceWindow variance_window = VarianceWindow::Estimation;
  /// Events on untraded days move to the next trading day within this many
  /// calendar days; beyond that the event is EventDateNotTraded.
  int max_shift_days = 7;
};

struct EventStudyRow {
  int relative_day = 0;
  bool available = false;  // false: no observation for this relative day
  Date date;
  double level = 0;
  double ret = 0;
  double ar = 0;
  double t_stat = 0;
  bool significant = false;
};

struct EventStudyReport {
  std::string pair;
  Date requested_date;
  Date event_date;  // after the trading-day shift
  double estimation_mean = 0;
  double s_ar = 0;
  int df = 0;
  double critical_t = 0;
  Eigen::VectorXd estimation_ar;
  std::vector<EventStudyRow> rows;  // relative days -h..+h

  const EventStudyRow& at(int relative_day) const;
};

/// Index of the first series date on or after `date`, if within max_shift_days.
std::optional<std::size_t> resolve_trading_day(std::span<const Date> dates, Date date,
                                               int max_shift_days);

/// Throws InsufficientHistory, EventDateNotTraded or DegenerateVariance.
/// Event-window days past the end of the series become unavailable rows.
EventStudyReport run_event_study(const RateSeries& series, Date event_date,
                                 const EventStudyConfig& cfg);

struct PanelCell {
  bool available = false;
  double ar = 0;
  double t_stat = 0;
  bool significant = false;
  std::string reason;  // why the cell is unavailable
};

/// Event-day abnormal returns for every (event, pair); cells[event][pair].
struct EventPanel {
  std::vector<std::string> pairs;
  std::vector<Date> event_dates;
  std::vector<std::vector<PanelCell>> cells;

  std::optional<std::size_t> pair_index(std::string_view pair) const;
};

EventPanel run_event_study_panel(std::span<const RateSeries> pairs, std::span<const Date> events,
                                 const EventStudyConfig& cfg, int threads = 1);
EventPanel run_event_study_panel(std::span<const RateSeries> pairs,
                                 std::span<const EventDate> events, const EventStudyConfig& cfg,
                                 int threads = 1);

enum class Verdict { GbpDriven, EurDriven, Mixed, Inconclusive };
std::string_view to_string(Verdict verdict);

struct PairEvidence {
  std::string pair;
  double ar = 0;
  bool significant = false;
};

struct NumeraireVerdict {
  Date event_date;
  Verdict verdict = Verdict::Inconclusive;
  std::array<PairEvidence, 3> evidence;  // GBP/EUR, GBP/USD, EUR/USD
};

/// mixed: all three significant. gbp_driven: GBP/EUR and GBP/USD significant
/// with the same sign, EUR/USD not. eur_driven: GBP/EUR and EUR/USD
/// significant, GBP/USD not. Otherwise inconclusive.
Verdict classify_numeraire(const PairEvidence& gbp_eur, const PairEvidence& gbp_usd,
                           const PairEvidence& eur_usd);

/// Throws Error(MissingPair) when any of the three FX pairs is absent or NA.
NumeraireVerdict numeraire_verdict(const EventPanel& panel, std::size_t event_row);

/// date,relative_day,level,return,ar,t_stat,significant
std::string event_study_csv(const EventStudyReport& report);
/// event_date, then <pair>_ar,<pair>_significant per pair.
std::string panel_csv(const EventPanel& panel);
std::string numeraire_csv(const std::vector<NumeraireVerdict>& verdicts);

}  // namespace eventlens
