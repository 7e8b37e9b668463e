// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "eventlens/correlation.hpp"
#include "eventlens/csv.hpp"
#include "eventlens/events.hpp"
#include "eventlens/eventstudy.hpp"
#include "eventlens/topics.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace eventlens;

namespace {

/// Collects the first few failed expectations of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s.precision(6);
    s << what << " = " << got << " (want " << want << " +/- " << tol << ")";
    expect(std::fabs(got - want) <= tol, s.str());
  }
  bool ok() const { return failures_ == 0; }
  std::string notes() const { return notes_.str(); }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

int failed = 0;

void criterion(int n, const std::string& title, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("threw: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0) c.expect(secs < budget_s, "took " + std::to_string(secs) + " s");
  std::printf("%s criterion %d: %s (%.3f s)%s%s\n", c.ok() ? "PASS" : "FAIL", n, title.c_str(), secs,
              c.ok() ? "" : " -- ", c.notes().c_str());
  if (!c.ok()) ++failed;
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

struct EcbFx {
  RateSeries gbp_eur, gbp_usd, eur_usd;
};

EcbFx load_ecb() {
  const auto eurgbp = load_rate_csv(testing_support::data_path("ecb_eurgbp.csv"), "Value", "EUR/GBP");
  const auto eurusd = load_rate_csv(testing_support::data_path("ecb_eurusd.csv"), "Value", "EUR/USD");
  return {exclude_weekends(invert(eurgbp)), exclude_weekends(derive_cross_rate(eurusd, eurgbp)),
          exclude_weekends(eurusd)};
}

const Date kReferendum = Date::from_ymd(2016, 6, 24);

void ecb_golden(Check& c) {
  const auto fx = load_ecb();
  const auto report = run_event_study(fx.gbp_eur, kReferendum, {});
  c.near(report.at(0).ar, -0.050, 0.004, "AR0");
  c.near(report.at(0).t_stat, -7.888, 1.0, "t0");
  c.near(report.at(1).ar, -0.031, 0.004, "AR+1");
}

void critical_value(Check& c) { c.near(critical_r(9, 0.05), 0.602, 0.001, "critical_r(9, 0.05)"); }

void correlation_properties(Check& c) {
  constexpr int n = 100;
  const auto dates = testing_support::weekdays(Date::from_ymd(2018, 1, 1), n);
  const Eigen::VectorXd x = testing_support::random_walk(n, 11, 40.0, 0.2);
  const Eigen::VectorXd y = testing_support::random_walk(n, 12, 1.15, 0.006);
  const double r = pearson(x, y);
  const auto want = oracle::pearson(to_std(x), to_std(y));
  c.near(r, *want, 1e-12, "r vs oracle");
  c.near(pearson(y, x), r, 1e-12, "symmetry");
  c.expect(std::fabs(r) <= 1.0, "|r| <= 1");
  for (const auto& [a, b] : {std::pair{3.5, -2.0}, std::pair{-0.25, 7.0}, std::pair{1e3, 1e-3}}) {
    const Eigen::VectorXd ax = (a * x.array() + b).matrix();
    c.near(pearson(ax, y), a > 0 ? r : -r, 1e-12, "affine a=" + std::to_string(a));
  }

  AlignedSeries aligned{dates, x, y};
  const auto wc = window_correlation(aligned, 11, 1, 0.05);
  const auto expected = oracle::windows(to_std(x), to_std(y), 11, 0.05);
  c.expect(wc.points.size() == expected.size(), "window count");
  for (std::size_t i = 0; i < std::min(wc.points.size(), expected.size()); ++i) {
    const auto& p = wc.points[i];
    c.expect(p.r.has_value() == expected[i].r.has_value(), "window defined " + std::to_string(i));
    if (p.r && expected[i].r) {
      c.near(*p.r, *expected[i].r, 1e-12, "window r " + std::to_string(i));
      c.expect(std::fabs(*p.r) <= 1.0, "window |r| <= 1");
    }
    c.expect(p.significant == expected[i].significant, "window significance " + std::to_string(i));
  }
}

void detectors(Check& c) {
  const auto f = fixtures::detection_fixture();
  const auto aligned = align(f.news, f.rate, NewsMetric::Mentions, RateMode::Level);
  const auto wc = window_correlation(aligned, 11, 1, 0.05);
  const auto events = detect_window_events(wc, f.news);
  const std::vector<int> articles(f.news.article_count.data(), f.news.article_count.data() + f.news.size());
  const auto want = oracle::window_events(aligned.dates, to_std(aligned.news_values),
                                          to_std(aligned.rate_values), articles, 11, 0.05);
  c.expect(events.size() == want.size(), "window event count " + std::to_string(events.size()) + " vs " +
                                             std::to_string(want.size()));
  for (std::size_t i = 0; i < std::min(events.size(), want.size()); ++i) {
    c.expect(events[i].date == want[i].date, "window event " + to_iso(events[i].date));
  }
  for (const auto& spike : f.spike_days) {
    const bool found = std::any_of(events.begin(), events.end(), [&](const EventDate& e) { return e.date == spike; });
    c.expect(found, "planted " + to_iso(spike));
  }

  const auto top = detect_top_quantile_events(f.news, 0.05);
  const auto top_want = oracle::top_quantile(f.news.dates, articles, 5, 100);
  c.expect(top.size() == top_want.size(), "quantile count " + std::to_string(top.size()) + " vs " +
                                              std::to_string(top_want.size()));
  for (std::size_t i = 0; i < std::min(top.size(), top_want.size()); ++i) {
    c.expect(top[i].date == top_want[i], "quantile event " + to_iso(top[i].date));
  }
}

void event_study_properties(Check& c) {
  const auto s = fixtures::study_fixture(7, 200);
  const std::vector<double> levels(s.values.data(), s.values.data() + s.values.size());
  for (std::size_t e : {156u, 170u, 194u}) {
    const auto report = run_event_study(s, s.dates[e], {});
    c.near(report.estimation_ar.sum(), 0.0, 1e-10, "sum of estimation ARs");

    auto scaled = s;
    scaled.values *= 137.5;
    const auto rescaled = run_event_study(scaled, s.dates[e], {});
    const auto want = oracle::event_study(levels, e, 150, 5, 0.10);
    c.near(report.s_ar, want.s_ar, 1e-12, "s_ar vs oracle");
    for (const auto& row : want.rows) {
      const auto& got = report.at(row.rel);
      c.expect(got.available, "row available");
      c.near(got.ar, row.ar, 1e-12, "AR vs oracle");
      c.near(got.t_stat, row.t, 1e-9, "t vs oracle");
      c.expect(got.significant == row.significant, "significance vs oracle");
      c.near(rescaled.at(row.rel).t_stat, got.t_stat, 1e-9, "t under scaling");
    }
  }
}

void three_pair_row(Check& c) {
  const auto fx = load_ecb();
  const std::vector<RateSeries> pairs{fx.gbp_eur, fx.gbp_usd, fx.eur_usd};
  const std::vector<Date> events{kReferendum};
  EventStudyConfig cfg;
  cfg.alpha = 0.05;
  const auto panel = run_event_study_panel(pairs, std::span<const Date>(events), cfg);
  const auto& row = panel.cells[0];
  const double want[3] = {-0.051, -0.078, -0.029};
  for (std::size_t i = 0; i < 3; ++i) {
    c.expect(row[i].available, panel.pairs[i] + " available");
    c.expect(row[i].ar < 0, panel.pairs[i] + " sign");
    c.expect(row[i].significant, panel.pairs[i] + " significant");
    c.near(row[i].ar, want[i], 0.005, panel.pairs[i] + " AR0");
  }
  c.expect(numeraire_verdict(panel, 0).verdict == Verdict::Mixed, "verdict mixed");
}

void lda(Check& c) {
  const auto corpus = fixtures::planted_corpus();
  const LdaParams params{.k = 2, .iterations = 1000, .seed = 17};
  const auto m = fit_lda(corpus.docs, params);
  for (Eigen::Index t = 0; t < m.beta.rows(); ++t) c.near(m.beta.row(t).sum(), 1.0, 1e-9, "beta row sum");
  for (Eigen::Index d = 0; d < m.theta.rows(); ++d) c.near(m.theta.row(d).sum(), 1.0, 1e-9, "theta row sum");

  const auto again = fit_lda(corpus.docs, params);
  c.expect(m.beta == again.beta && m.theta == again.theta && m.assignments == again.assignments,
           "bit-identical refit");

  auto purity = [](const std::vector<std::string>& words, const std::vector<std::string>& vocab) {
    const auto hits = std::count_if(words.begin(), words.end(), [&](const std::string& w) {
      return std::find(vocab.begin(), vocab.end(), w) != vocab.end();
    });
    return static_cast<double>(hits) / static_cast<double>(words.size());
  };
  for (int t = 0; t < 2; ++t) {
    const auto words = top_words(m, t, 20);
    const double p = std::max(purity(words, corpus.vocab_a), purity(words, corpus.vocab_b));
    c.expect(p >= 0.9, "topic " + std::to_string(t) + " purity " + std::to_string(p));
  }
}

void reproducible_run(Check& c) {
  namespace fs = std::filesystem;
  const auto base = testing_support::scratch_dir("acceptance_repro");
  std::string manifests[2];
  for (int i = 0; i < 2; ++i) {
    const auto out = base / ("run" + std::to_string(i));
    const std::string cmd = std::string(EVENTLENS_CLI) + " run-all --config " +
                            testing_support::data_path("example.conf") + " --out " + out.string() +
                            " >/dev/null 2>&1";
    c.expect(std::system(cmd.c_str()) == 0, "run-all " + std::to_string(i) + " exit status");
    if (fs::exists(out / "manifest.txt")) manifests[i] = csv::read_text_file((out / "manifest.txt").string());
  }
  c.expect(!manifests[0].empty(), "manifest written");
  c.expect(manifests[0] == manifests[1], "manifests differ");
}

}  // namespace

int main() {
  criterion(1, "ECB GBP/EUR referendum abnormal returns", 5.0, ecb_golden);
  criterion(2, "critical r for df 9 at 0.05", 0, critical_value);
  criterion(3, "correlation properties on a 100-day fixture", 1.0, correlation_properties);
  criterion(4, "both detectors match brute force on planted episodes", 1.0, detectors);
  criterion(5, "event study identities and oracle on a 200-day fixture", 0, event_study_properties);
  criterion(6, "three-pair referendum row and numeraire verdict", 0, three_pair_row);
  criterion(7, "LDA normalisation, determinism and purity", 10.0, lda);
  criterion(8, "two run-all executions give identical manifests", 0, reproducible_run);
  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
