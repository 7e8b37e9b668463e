#include "eventlens/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include "eventlens/correlation.hpp"
#include "eventlens/csv.hpp"
#include "eventlens/events.hpp"
#include "eventlens/eventstudy.hpp"
#include "eventlens/fetch.hpp"
#include "eventlens/output.hpp"
#include "eventlens/parallel.hpp"
#include "eventlens/topics.hpp"

namespace eventlens {

namespace {

std::string slug(std::string s) {
  for (char& c : s) {
    if (c == '/' || c == '\\' || c == ' ' || c == ':') c = '-';
  }
  return s;
}

struct FxRates {
  RateSeries gbp_eur;
  RateSeries gbp_usd;
  RateSeries eur_usd;

  std::vector<RateSeries> triplet() const { return {gbp_eur, gbp_usd, eur_usd}; }
};

/// Mutable state threaded through the stages of one run.
class Run {
 public:
  Run(const RunConfig& cfg, std::ostream& log) : cfg_(cfg), log_(log), out_(cfg.out_dir) {}

  PipelineResult execute(Command command) {
    const bool all = command == Command::RunAll;
    const bool want_correlate = command != Command::Ingest;
    const bool want_detect = all || command == Command::DetectEvents ||
                             command == Command::EventStudy || command == Command::Topics;
    const bool want_study = all || command == Command::EventStudy;
    const bool want_topics = all || command == Command::Topics;

    const bool news_ok = stage("ingest_news", {}, [&] { ingest_news(); });
    const bool rates_ok = stage("ingest_rates", {}, [&] { ingest_rates(); });
    if (!cfg_.extra_pairs.empty()) stage("ingest_extra_pairs", {}, [&] { ingest_extra(); });

    bool correlate_ok = false;
    if (want_correlate) {
      correlate_ok = stage("correlate", {{"ingest_news", news_ok}, {"ingest_rates", rates_ok}},
                           [&] { correlate(); });
    }
    bool detect_ok = false;
    if (want_detect) {
      detect_ok = stage("detect_events", {{"correlate", correlate_ok}}, [&] { detect(); });
    }
    if (want_study) {
      // Configured event dates keep this stage useful without news.
      stage("event_study", {{"ingest_rates", rates_ok}}, [&] { event_study(detect_ok); });
    }
    if (want_topics) {
      stage("topics", {{"ingest_news", news_ok}}, [&] { topics(detect_ok); });
    }
    return finish();
  }

 private:
  using Dependency = std::pair<std::string, bool>;

  bool stage(const std::string& name, std::vector<Dependency> deps, const std::function<void()>& body) {
    for (const auto& [dep, ok] : deps) {
      if (!ok) {
        log_ << "[" << name << "] skipped: " << dep << " did not complete\n";
        statuses_.push_back({name, StageState::Skipped, dep + " did not complete"});
        return false;
      }
    }
    log_ << "[" << name << "] running\n";
    try {
      body();
    } catch (const std::exception& e) {
      log_ << "[" << name << "] failed: " << e.what() << "\n";
      statuses_.push_back({name, StageState::Failed, e.what()});
      return false;
    }
    statuses_.push_back({name, StageState::Ok, {}});
    return true;
  }

  PipelineResult finish() {
    csv::Writer status({"stage", "status", "message"});
    PipelineResult result;
    for (const auto& s : statuses_) {
      status.write_row({s.stage, std::string(to_string(s.state)), s.message});
      if (s.state != StageState::Ok) result.exit_code = 1;
    }
    out_.write("stages.csv", status.str());
    result.manifest = out_.write_manifest();
    result.files = out_.files();
    result.files.push_back("manifest.txt");
    result.stages = statuses_;
    return result;
  }

  void ingest_news() {
    if (cfg_.news_path.empty()) throw Error(ErrorCode::ConfigError, "news_path is not set");
    StopwordSet stopwords;
    if (!cfg_.stopword_path.empty()) stopwords = load_stopwords(cfg_.stopword_path);
    corpus_ = load_news_csv(cfg_.news_path, stopwords, {cfg_.study_range, cfg_.boilerplate_markers});
    const auto daily = aggregate_daily(*corpus_, cfg_.term, cfg_.study_range, cfg_.mention_mode);
    out_.write("news/daily_news.csv", daily_news_csv(daily));
    news_ = cfg_.weekend_policy == WeekendPolicy::Exclude ? exclude_weekends(daily) : daily;
    log_ << "  " << corpus_->size() << " articles, " << news_->size() << " analysed days\n";
  }

  RateSeries apply_weekend_policy(const RateSeries& s) const {
    return cfg_.weekend_policy == WeekendPolicy::Exclude ? exclude_weekends(s)
                                                         : carry_forward_weekends(s);
  }

  void ingest_rates() {
    if (cfg_.eurgbp_path.empty() || cfg_.eurusd_path.empty()) {
      throw Error(ErrorCode::ConfigError, "eurgbp_path and eurusd_path must both be set");
    }
    const auto eurgbp = load_rate_csv(cfg_.eurgbp_path, cfg_.value_column, "EUR/GBP");
    const auto eurusd = load_rate_csv(cfg_.eurusd_path, cfg_.value_column, "EUR/USD");
    FxRates fx;
    fx.gbp_eur = apply_weekend_policy(invert(eurgbp));
    fx.gbp_usd = apply_weekend_policy(derive_cross_rate(eurusd, eurgbp));
    fx.eur_usd = apply_weekend_policy(eurusd);
    for (const auto& s : fx.triplet()) out_.write("rates/" + slug(s.pair) + ".csv", series_csv(s));
    fx_ = std::move(fx);
  }

  void ingest_extra() {
    std::vector<RateSeries> extras;
    for (const auto& p : cfg_.extra_pairs) {
      extras.push_back(apply_weekend_policy(load_rate_csv(p.path, cfg_.extra_value_column, p.name)));
      out_.write("rates/" + slug(p.name) + ".csv", series_csv(extras.back()));
    }
    extras_ = std::move(extras);
  }

  void correlate() {
    const auto& rate = fx_->gbp_eur;
    out_.write("correlation/overall.csv", correlation_table_csv(overall_correlation(*news_, rate)));
    const auto aligned = align(*news_, rate, cfg_.window_metric, cfg_.window_rate_mode);
    out_.write("correlation/cumulative.csv",
               correlation_points_csv(cumulative_correlation(aligned, cfg_.window_alpha, cfg_.tail)));
    window_ = window_correlation(aligned, cfg_.window_len, cfg_.window_step, cfg_.window_alpha, cfg_.tail);
    out_.write("correlation/window.csv", correlation_points_csv(window_->points));
  }

  void detect() {
    window_events_ = detect_window_events(*window_, *news_);
    quantile_events_ = detect_top_quantile_events(*news_, cfg_.quantile);
    std::vector<EventDate> all = window_events_;
    all.insert(all.end(), quantile_events_.begin(), quantile_events_.end());
    out_.write("events/events.csv", events_csv(all));
    log_ << "  " << window_events_.size() << " window-correlation events, "
         << quantile_events_.size() << " top-quantile events\n";
  }

  std::vector<std::pair<DetectionMethod, std::vector<Date>>> event_sets(bool detected) const {
    std::vector<std::pair<DetectionMethod, std::vector<Date>>> sets;
    auto dates_of = [](const std::vector<EventDate>& events) {
      std::vector<Date> out;
      for (const auto& e : events) out.push_back(e.date);
      return out;
    };
    if (detected) {
      sets.emplace_back(DetectionMethod::WindowCorrelation, dates_of(window_events_));
      sets.emplace_back(DetectionMethod::TopQuantile, dates_of(quantile_events_));
    }
    if (!cfg_.event_dates.empty()) {
      auto configured = cfg_.event_dates;
      std::sort(configured.begin(), configured.end());
      configured.erase(std::unique(configured.begin(), configured.end()), configured.end());
      sets.emplace_back(DetectionMethod::Configured, configured);
    }
    return sets;
  }

  static std::vector<Date> union_of(const std::vector<std::pair<DetectionMethod, std::vector<Date>>>& sets) {
    std::set<Date> all;
    for (const auto& [method, dates] : sets) all.insert(dates.begin(), dates.end());
    return {all.begin(), all.end()};
  }

  void event_study(bool detected) {
    const auto sets = event_sets(detected);
    const auto panel_cfg = cfg_.event_study_config(cfg_.panel_alpha);
    const auto triplet = fx_->triplet();
    for (const auto& [method, dates] : sets) {
      const auto name = std::string(to_string(method));
      const auto panel = run_event_study_panel(triplet, std::span<const Date>(dates), panel_cfg, cfg_.parallel);
      out_.write("event_study/panel_" + name + ".csv", panel_csv(panel));
      std::vector<NumeraireVerdict> verdicts;
      for (std::size_t i = 0; i < dates.size(); ++i) {
        try {
          verdicts.push_back(numeraire_verdict(panel, i));
        } catch (const Error& e) {
          log_ << "  numeraire " << to_iso(dates[i]) << ": " << e.what() << "\n";
        }
      }
      out_.write("event_study/numeraire_" + name + ".csv", numeraire_csv(verdicts));
      if (extras_ && !extras_->empty()) {
        const auto crypto = run_event_study_panel(*extras_, std::span<const Date>(dates), panel_cfg, cfg_.parallel);
        out_.write("event_study/extra_panel_" + name + ".csv", panel_csv(crypto));
      }
    }

    // Per-event day-by-day reports for the primary pair.
    const auto report_cfg = cfg_.event_study_config(cfg_.event_alpha);
    const auto dates = union_of(sets);
    std::vector<std::optional<EventStudyReport>> reports(dates.size());
    std::vector<std::string> errors(dates.size());
    parallel_for(dates.size(), cfg_.parallel, [&](std::size_t i) {
      try {
        reports[i] = run_event_study(fx_->gbp_eur, dates[i], report_cfg);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    });
    csv::Writer failures({"event_date", "error"});
    bool any_failure = false;
    for (std::size_t i = 0; i < dates.size(); ++i) {
      if (reports[i]) {
        out_.write("event_study/reports/" + slug(fx_->gbp_eur.pair) + "_" + to_iso(dates[i]) + ".csv",
                   event_study_csv(*reports[i]));
      } else {
        failures.write_row({to_iso(dates[i]), errors[i]});
        any_failure = true;
      }
    }
    if (any_failure) out_.write("event_study/report_errors.csv", failures.str());
  }

  void topics(bool detected) {
    const auto dates = union_of(event_sets(detected));
    const auto timeline = tracked_word_timeline(*corpus_, dates, cfg_.tracked_words, cfg_.lda,
                                                cfg_.topic_half_width, cfg_.top_n, cfg_.parallel);
    out_.write("topics/timeline.csv", timeline_csv(timeline));
    for (std::size_t i = 0; i < dates.size(); ++i) {
      if (timeline.fits[i]) {
        out_.write("topics/" + to_iso(dates[i]) + ".txt", topic_dump(timeline.fits[i]->model, cfg_.top_n));
      }
    }
  }

  const RunConfig& cfg_;
  std::ostream& log_;
  OutputDir out_;
  std::vector<StageStatus> statuses_;

  std::optional<std::vector<Article>> corpus_;
  std::optional<DailyNewsSeries> news_;
  std::optional<FxRates> fx_;
  std::optional<std::vector<RateSeries>> extras_;
  std::optional<WindowCorrelationSeries> window_;
  std::vector<EventDate> window_events_;
  std::vector<EventDate> quantile_events_;
};

}  // namespace

std::string_view to_string(StageState state) {
  switch (state) {
    case StageState::Ok: return "ok";
    case StageState::Failed: return "failed";
    case StageState::Skipped: return "skipped";
  }
  return "unknown";
}

PipelineResult run_pipeline(const RunConfig& cfg, Command command, std::ostream& log) {
  if (command == Command::FetchRates) return fetch_rates(cfg, log);
  validate(cfg);
  return Run(cfg, log).execute(command);
}

PipelineResult fetch_rates(const RunConfig& cfg, std::ostream& log) {
  validate(cfg);
  if (cfg.rate_url_template.empty() || cfg.fetch_pairs.empty()) {
    throw Error(ErrorCode::ConfigError, "fetch-rates needs rate_url_template and fetch_pairs");
  }
  FetchOptions options;
  options.retries = cfg.fetch_retries;
  options.timeout = std::chrono::milliseconds(cfg.fetch_timeout_ms);
  options.backoff = std::chrono::milliseconds(cfg.fetch_backoff_ms);
  options.raw_dir = cfg.raw_dir;

  PipelineResult result;
  OutputDir raw(cfg.raw_dir);
  for (const auto& pair : cfg.fetch_pairs) {
    const auto name = "fetch " + pair;
    try {
      const auto fetched = fetch_rate_csv(cfg.rate_url_template, pair, cfg.study_range, options);
      const auto relative = std::filesystem::path(fetched.path).filename().string();
      raw.record(relative, fetched.body);
      parse_rate_csv(fetched.body, cfg.value_column, pair, fetched.url);
      log << "[" << name << "] " << fetched.body.size() << " bytes -> " << fetched.path << "\n";
      result.stages.push_back({name, StageState::Ok, {}});
    } catch (const std::exception& e) {
      log << "[" << name << "] failed: " << e.what() << "\n";
      result.stages.push_back({name, StageState::Failed, e.what()});
      result.exit_code = 1;
    }
  }
  result.manifest = raw.write_manifest();
  result.files = raw.files();
  return result;
}

}  // namespace eventlens
