#include "eventlens/eventstudy.hpp"

#include <algorithm>

#include "eventlens/csv.hpp"
#include "eventlens/error.hpp"
#include "eventlens/parallel.hpp"
#include "eventlens/stats.hpp"

namespace eventlens {

namespace {

// Returns derived from levels carry absolute rounding error of a few ulps of
// 1.0, so any spread below this is numerical noise.
constexpr double kDegenerateScale = 1e-12;

void validate(const EventStudyConfig& cfg) {
  if (cfg.estimation_len < 3) {
    throw Error(ErrorCode::InvalidArgument, "estimation_len must be >= 3");
  }
  if (cfg.event_half_width < 0) {
    throw Error(ErrorCode::InvalidArgument, "event_half_width must be >= 0");
  }
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
    throw Error(ErrorCode::InvalidAlpha, "event study alpha must lie in (0,1)");
  }
}

}  // namespace

const EventStudyRow& EventStudyReport::at(int relative_day) const {
  const auto h = static_cast<int>(rows.size() / 2);
  if (relative_day < -h || relative_day > h) {
    throw Error(ErrorCode::InvalidArgument, "relative day outside event window");
  }
  return rows[static_cast<std::size_t>(relative_day + h)];
}

std::optional<std::size_t> resolve_trading_day(std::span<const Date> dates, Date date,
                                               int max_shift_days) {
  const auto it = std::lower_bound(dates.begin(), dates.end(), date);
  if (it == dates.end() || (*it - date) > max_shift_days) return std::nullopt;
  return static_cast<std::size_t>(it - dates.begin());
}

EventStudyReport run_event_study(const RateSeries& series, Date event_date,
                                 const EventStudyConfig& cfg) {
  validate(cfg);
  const auto where = series.pair + " @ " + to_iso(event_date);
  const auto resolved = resolve_trading_day(series.dates, event_date, cfg.max_shift_days);
  if (!resolved) throw Error(ErrorCode::EventDateNotTraded, where);

  const auto n = series.size();
  const auto e = static_cast<Eigen::Index>(*resolved);
  const Eigen::Index h = cfg.event_half_width;
  const Eigen::Index len = cfg.estimation_len;
  // Returns need a previous level, so the first estimation return sits at index >= 1.
  const Eigen::Index est_first = e - h - len;
  if (est_first < 1) {
    throw Error(ErrorCode::InsufficientHistory,
                where + ": need " + std::to_string(len) + " returns before day -" +
                    std::to_string(h) + ", have " + std::to_string(std::max<Eigen::Index>(e - h - 1, 0)));
  }

  const Eigen::VectorXd& level = series.values;
  auto simple_return = [&](Eigen::Index i) { return (level[i] - level[i - 1]) / level[i - 1]; };
  Eigen::VectorXd est_returns(len);
  for (Eigen::Index i = 0; i < len; ++i) est_returns[i] = simple_return(est_first + i);

  EventStudyReport report;
  report.pair = series.pair;
  report.requested_date = event_date;
  report.event_date = series.dates[*resolved];
  report.estimation_mean = est_returns.mean();
  report.estimation_ar = abnormal_returns(est_returns, report.estimation_mean);

  std::vector<double> event_ar;
  for (Eigen::Index k = -h; k <= h; ++k) {
    EventStudyRow row;
    row.relative_day = static_cast<int>(k);
    const Eigen::Index i = e + k;
    if (i < n) {
      row.available = true;
      row.date = series.dates[static_cast<std::size_t>(i)];
      row.level = level[i];
      row.ret = simple_return(i);
      row.ar = row.ret - report.estimation_mean;
      event_ar.push_back(row.ar);
    }
    report.rows.push_back(row);
  }

  if (cfg.variance_window == VarianceWindow::Estimation) {
    report.s_ar = abnormal_return_scale(report.estimation_ar);
    report.df = static_cast<int>(len - 2);
  } else {
    if (event_ar.size() < 3) {
      throw Error(ErrorCode::InsufficientHistory, where + ": event-window variance needs 3 days");
    }
    const Eigen::Map<const Eigen::VectorXd> ar(event_ar.data(),
                                               static_cast<Eigen::Index>(event_ar.size()));
    report.s_ar = abnormal_return_scale(ar);
    report.df = static_cast<int>(event_ar.size()) - 2;
  }
  if (!(report.s_ar > kDegenerateScale)) {
    throw Error(ErrorCode::DegenerateVariance, where + ": s_AR is zero, t undefined");
  }

  report.critical_t = stats::critical_t(report.df, cfg.alpha);
  for (auto& row : report.rows) {
    if (!row.available) continue;
    row.t_stat = row.ar / report.s_ar;
    row.significant = std::fabs(row.t_stat) >= report.critical_t;
  }
  return report;
}

std::optional<std::size_t> EventPanel::pair_index(std::string_view pair) const {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i] == pair) return i;
  }
  return std::nullopt;
}

EventPanel run_event_study_panel(std::span<const RateSeries> pairs, std::span<const Date> events,
                                 const EventStudyConfig& cfg, int threads) {
  EventPanel panel;
  for (const auto& p : pairs) panel.pairs.push_back(p.pair);
  panel.event_dates.assign(events.begin(), events.end());
  panel.cells.assign(events.size(), std::vector<PanelCell>(pairs.size()));

  parallel_for(events.size() * pairs.size(), threads, [&](std::size_t job) {
    const auto ev = job / pairs.size();
    const auto pr = job % pairs.size();
    PanelCell& cell = panel.cells[ev][pr];
    try {
      const auto report = run_event_study(pairs[pr], events[ev], cfg);
      const auto& row = report.at(0);
      cell.available = row.available;
      cell.ar = row.ar;
      cell.t_stat = row.t_stat;
      cell.significant = row.significant;
    } catch (const Error& err) {
      cell.available = false;
      cell.reason = err.what();
    }
  });
  return panel;
}

EventPanel run_event_study_panel(std::span<const RateSeries> pairs,
                                 std::span<const EventDate> events, const EventStudyConfig& cfg,
                                 int threads) {
  std::vector<Date> dates;
  for (const auto& e : events) dates.push_back(e.date);
  return run_event_study_panel(pairs, std::span<const Date>(dates), cfg, threads);
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::GbpDriven: return "gbp_driven";
    case Verdict::EurDriven: return "eur_driven";
    case Verdict::Mixed: return "mixed";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

Verdict classify_numeraire(const PairEvidence& gbp_eur, const PairEvidence& gbp_usd,
                           const PairEvidence& eur_usd) {
  if (gbp_eur.significant && gbp_usd.significant && eur_usd.significant) return Verdict::Mixed;
  if (gbp_eur.significant && gbp_usd.significant && !eur_usd.significant &&
      std::signbit(gbp_eur.ar) == std::signbit(gbp_usd.ar)) {
    return Verdict::GbpDriven;
  }
  if (gbp_eur.significant && eur_usd.significant && !gbp_usd.significant) {
    return Verdict::EurDriven;
  }
  return Verdict::Inconclusive;
}

NumeraireVerdict numeraire_verdict(const EventPanel& panel, std::size_t event_row) {
  if (event_row >= panel.event_dates.size()) {
    throw Error(ErrorCode::InvalidArgument, "panel row out of range");
  }
  NumeraireVerdict out;
  out.event_date = panel.event_dates[event_row];
  const std::array<std::string_view, 3> names = {"GBP/EUR", "GBP/USD", "EUR/USD"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto idx = panel.pair_index(names[i]);
    if (!idx) throw Error(ErrorCode::MissingPair, std::string(names[i]) + " not in panel");
    const auto& cell = panel.cells[event_row][*idx];
    if (!cell.available) {
      throw Error(ErrorCode::MissingPair, std::string(names[i]) + " unavailable on " +
                                              to_iso(out.event_date));
    }
    out.evidence[i] = {std::string(names[i]), cell.ar, cell.significant};
  }
  out.verdict = classify_numeraire(out.evidence[0], out.evidence[1], out.evidence[2]);
  return out;
}

std::string event_study_csv(const EventStudyReport& report) {
  csv::Writer out({"date", "relative_day", "level", "return", "ar", "t_stat", "significant"});
  for (const auto& row : report.rows) {
    if (!row.available) {
      out.write_row({"NA", std::to_string(row.relative_day), "NA", "NA", "NA", "NA", "NA"});
      continue;
    }
    out.write_row({to_iso(row.date), std::to_string(row.relative_day),
                   csv::format_double(row.level), csv::format_double(row.ret),
                   csv::format_double(row.ar), csv::format_double(row.t_stat),
                   row.significant ? "1" : "0"});
  }
  return out.str();
}

std::string panel_csv(const EventPanel& panel) {
  csv::Row header{"event_date"};
  for (const auto& p : panel.pairs) {
    header.push_back(p + "_ar");
    header.push_back(p + "_significant");
  }
  csv::Writer out(header);
  for (std::size_t ev = 0; ev < panel.event_dates.size(); ++ev) {
    csv::Row row{to_iso(panel.event_dates[ev])};
    for (const auto& cell : panel.cells[ev]) {
      row.push_back(cell.available ? csv::format_double(cell.ar) : "NA");
      row.push_back(cell.available ? (cell.significant ? "1" : "0") : "NA");
    }
    out.write_row(row);
  }
  return out.str();
}

std::string numeraire_csv(const std::vector<NumeraireVerdict>& verdicts) {
  csv::Writer out({"event_date", "verdict", "gbp_eur_ar", "gbp_eur_significant", "gbp_usd_ar",
                   "gbp_usd_significant", "eur_usd_ar", "eur_usd_significant"});
  for (const auto& v : verdicts) {
    csv::Row row{to_iso(v.event_date), std::string(to_string(v.verdict))};
    for (const auto& e : v.evidence) {
      row.push_back(csv::format_double(e.ar));
      row.push_back(e.significant ? "1" : "0");
    }
    out.write_row(row);
  }
  return out.str();
}

}  // namespace eventlens
