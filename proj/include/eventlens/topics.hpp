#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eventlens/corpus.hpp"

namespace eventlens {

struct LdaParams {
  int k = 5;
  std::optional<double> alpha_prior;  // defaults to 50 / k
  double eta_prior = 0.01;
  int iterations = 1000;
  std::uint64_t seed = 1;
};

/// Fitted collapsed-Gibbs LDA state. Vocabulary is sorted, so word ids do not
/// depend on document order.
struct TopicModel {
  int k = 0;
  double alpha_prior = 0;
  double eta_prior = 0;
  int iterations = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> vocab;
  Eigen::MatrixXd beta;   // k x |vocab|, rows sum to 1
  Eigen::MatrixXd theta;  // |docs| x k, rows sum to 1
  Eigen::MatrixXi topic_word_counts;  // k x |vocab|
  Eigen::MatrixXi doc_topic_counts;   // |docs| x k
  std::vector<std::vector<int>> assignments;  // per document, per token
};

/// Called after every sweep with the current topic-word count matrix.
using SweepObserver = std::function<void(int sweep, const Eigen::MatrixXi& topic_word_counts)>;

/// Collapsed Gibbs sampling with symmetric Dirichlet priors; bit-for-bit
/// deterministic for a given seed. Throws EmptyCorpus, KTooLarge.
TopicModel fit_lda(const std::vector<Tokens>& docs, const LdaParams& params,
                   const SweepObserver& observer = {});

/// Highest-beta words, descending, ties broken lexicographically.
/// Throws Error(BadTopicIndex).
std::vector<std::string> top_words(const TopicModel& model, int topic, int n = 20);

struct WindowTopics {
  TopicModel model;
  std::vector<std::string> top_union;  // sorted union of per-topic top words
};

/// LDA over all articles dated within event_date +/- half_width calendar
/// days; k is clamped to the document count. Throws NoDocumentsInWindow.
WindowTopics event_window_topics(std::span<const Article> corpus, Date event_date,
                                 int half_width, const LdaParams& params, int top_n = 20);

/// Per-event RNG seed derived from the run seed and the event date.
std::uint64_t event_seed(std::uint64_t base_seed, Date event_date);

struct TrackedWordTimeline {
  std::vector<std::string> words;
  std::vector<Date> event_dates;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> present;  // events x words
  std::vector<std::optional<WindowTopics>> fits;
  std::vector<std::string> errors;  // empty when the event's fit succeeded
};

/// Fits one model per event (seeded by event_seed) and marks which tracked
/// words reach a top-n list. Per-event failures are collected, not thrown.
TrackedWordTimeline tracked_word_timeline(std::span<const Article> corpus,
                                          std::span<const Date> events,
                                          const std::vector<std::string>& tracked,
                                          const LdaParams& params, int half_width = 5,
                                          int top_n = 20, int threads = 1);

/// event_date,word,present
std::string timeline_csv(const TrackedWordTimeline& timeline);
/// Plain text: per topic, the top words with their beta values.
std::string topic_dump(const TopicModel& model, int top_n = 20);

}  // namespace eventlens
