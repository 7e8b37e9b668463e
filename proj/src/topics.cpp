#include "eventlens/topics.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "eventlens/csv.hpp"
#include "eventlens/error.hpp"
#include "eventlens/parallel.hpp"

namespace eventlens {

namespace {

// mt19937_64 is fully specified by the standard; the distributions are not,
// so uniforms are built from raw bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

TopicModel fit_lda(const std::vector<Tokens>& docs, const LdaParams& params,
                   const SweepObserver& observer) {
  if (params.k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  if (!(params.eta_prior > 0.0)) throw Error(ErrorCode::InvalidArgument, "eta must be > 0");
  if (params.iterations < 0) throw Error(ErrorCode::InvalidArgument, "iterations must be >= 0");

  std::size_t total_tokens = 0;
  for (const auto& d : docs) total_tokens += d.size();
  if (docs.empty() || total_tokens == 0) {
    throw Error(ErrorCode::EmptyCorpus, "no tokens to fit");
  }
  if (static_cast<std::size_t>(params.k) > total_tokens) {
    throw Error(ErrorCode::KTooLarge, "k=" + std::to_string(params.k) + " exceeds " +
                                          std::to_string(total_tokens) + " tokens");
  }

  TopicModel model;
  model.k = params.k;
  model.alpha_prior = params.alpha_prior.value_or(50.0 / params.k);
  model.eta_prior = params.eta_prior;
  model.iterations = params.iterations;
  model.seed = params.seed;
  if (!(model.alpha_prior > 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be > 0");

  for (const auto& d : docs) model.vocab.insert(model.vocab.end(), d.begin(), d.end());
  std::sort(model.vocab.begin(), model.vocab.end());
  model.vocab.erase(std::unique(model.vocab.begin(), model.vocab.end()), model.vocab.end());
  std::unordered_map<std::string, int> word_id;
  for (std::size_t i = 0; i < model.vocab.size(); ++i) word_id[model.vocab[i]] = static_cast<int>(i);

  const int k = params.k;
  const auto n_words = static_cast<Eigen::Index>(model.vocab.size());
  const auto n_docs = static_cast<Eigen::Index>(docs.size());
  std::vector<std::vector<int>> words(docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (const auto& t : docs[d]) words[d].push_back(word_id.at(t));
  }

  Eigen::MatrixXi& nw = model.topic_word_counts;
  Eigen::MatrixXi& nd = model.doc_topic_counts;
  nw = Eigen::MatrixXi::Zero(k, n_words);
  nd = Eigen::MatrixXi::Zero(n_docs, k);
  Eigen::VectorXi nt = Eigen::VectorXi::Zero(k);

  Rng rng(params.seed);
  model.assignments.resize(docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (int w : words[d]) {
      const int z = std::min(k - 1, static_cast<int>(rng.uniform() * k));
      model.assignments[d].push_back(z);
      ++nw(z, w);
      ++nd(static_cast<Eigen::Index>(d), z);
      ++nt[z];
    }
  }

  const double alpha = model.alpha_prior;
  const double eta = model.eta_prior;
  const double v_eta = static_cast<double>(n_words) * eta;
  std::vector<double> cumulative(static_cast<std::size_t>(k));
  for (int sweep = 0; sweep < params.iterations; ++sweep) {
    for (std::size_t d = 0; d < docs.size(); ++d) {
      const auto di = static_cast<Eigen::Index>(d);
      auto& z_doc = model.assignments[d];
      for (std::size_t i = 0; i < words[d].size(); ++i) {
        const int w = words[d][i];
        int z = z_doc[i];
        --nw(z, w);
        --nd(di, z);
        --nt[z];

        double total = 0;
        for (int t = 0; t < k; ++t) {
          total += (nd(di, t) + alpha) * (nw(t, w) + eta) / (nt[t] + v_eta);
          cumulative[static_cast<std::size_t>(t)] = total;
        }
        const double u = rng.uniform() * total;
        z = static_cast<int>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                             cumulative.begin());
        z = std::min(z, k - 1);

        z_doc[i] = z;
        ++nw(z, w);
        ++nd(di, z);
        ++nt[z];
      }
    }
    if (observer) observer(sweep, nw);
  }

  model.beta = (nw.cast<double>().array() + eta).matrix();
  model.beta.array().colwise() /= (nt.cast<double>().array() + v_eta);
  model.theta = (nd.cast<double>().array() + alpha).matrix();
  const Eigen::VectorXd doc_len = nd.rowwise().sum().cast<double>();
  model.theta.array().colwise() /= (doc_len.array() + k * alpha);
  return model;
}

std::vector<std::string> top_words(const TopicModel& model, int topic, int n) {
  if (topic < 0 || topic >= model.k) {
    throw Error(ErrorCode::BadTopicIndex,
                std::to_string(topic) + " not in [0," + std::to_string(model.k) + ")");
  }
  std::vector<int> order(model.vocab.size());
  std::iota(order.begin(), order.end(), 0);
  const auto row = model.beta.row(topic);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (row[a] != row[b]) return row[a] > row[b];
    return model.vocab[static_cast<std::size_t>(a)] < model.vocab[static_cast<std::size_t>(b)];
  });
  order.resize(std::min(order.size(), static_cast<std::size_t>(std::max(n, 0))));
  std::vector<std::string> out;
  for (int idx : order) out.push_back(model.vocab[static_cast<std::size_t>(idx)]);
  return out;
}

WindowTopics event_window_topics(std::span<const Article> corpus, Date event_date,
                                 int half_width, const LdaParams& params, int top_n) {
  const DateRange window{event_date - half_width, event_date + half_width};
  std::vector<Tokens> docs;
  bool any_article = false;
  for (const auto& a : corpus) {
    if (!window.contains(a.date)) continue;
    any_article = true;
    if (!a.tokens.empty()) docs.push_back(a.tokens);
  }
  if (!any_article) {
    throw Error(ErrorCode::NoDocumentsInWindow,
                "no articles within " + std::to_string(half_width) + " days of " + to_iso(event_date));
  }
  LdaParams effective = params;
  effective.k = std::max(1, std::min(params.k, static_cast<int>(docs.size())));

  WindowTopics out{fit_lda(docs, effective), {}};
  for (int t = 0; t < out.model.k; ++t) {
    for (auto& w : top_words(out.model, t, top_n)) out.top_union.push_back(std::move(w));
  }
  std::sort(out.top_union.begin(), out.top_union.end());
  out.top_union.erase(std::unique(out.top_union.begin(), out.top_union.end()), out.top_union.end());
  return out;
}

std::uint64_t event_seed(std::uint64_t base_seed, Date event_date) {
  return splitmix64(base_seed ^ splitmix64(static_cast<std::uint64_t>(event_date.serial())));
}

TrackedWordTimeline tracked_word_timeline(std::span<const Article> corpus,
                                          std::span<const Date> events,
                                          const std::vector<std::string>& tracked,
                                          const LdaParams& params, int half_width, int top_n,
                                          int threads) {
  TrackedWordTimeline timeline;
  timeline.words = tracked;
  timeline.event_dates.assign(events.begin(), events.end());
  const auto n_events = static_cast<Eigen::Index>(events.size());
  const auto n_words = static_cast<Eigen::Index>(tracked.size());
  timeline.present = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n_events, n_words, false);
  timeline.fits.resize(events.size());
  timeline.errors.resize(events.size());

  parallel_for(events.size(), threads, [&](std::size_t e) {
    LdaParams p = params;
    p.seed = event_seed(params.seed, events[e]);
    try {
      timeline.fits[e] = event_window_topics(corpus, events[e], half_width, p, top_n);
    } catch (const Error& err) {
      timeline.errors[e] = err.what();
    }
  });

  for (Eigen::Index e = 0; e < n_events; ++e) {
    const auto& fit = timeline.fits[static_cast<std::size_t>(e)];
    if (!fit) continue;
    for (Eigen::Index w = 0; w < n_words; ++w) {
      timeline.present(e, w) = std::binary_search(fit->top_union.begin(), fit->top_union.end(),
                                                  tracked[static_cast<std::size_t>(w)]);
    }
  }
  return timeline;
}

std::string timeline_csv(const TrackedWordTimeline& timeline) {
  csv::Writer out({"event_date", "word", "present"});
  for (std::size_t e = 0; e < timeline.event_dates.size(); ++e) {
    for (std::size_t w = 0; w < timeline.words.size(); ++w) {
      const bool ok = timeline.errors[e].empty();
      out.write_row({to_iso(timeline.event_dates[e]), timeline.words[w],
                     !ok ? "NA"
                         : (timeline.present(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(w))
                                ? "1"
                                : "0")});
    }
  }
  return out.str();
}

std::string topic_dump(const TopicModel& model, int top_n) {
  std::ostringstream out;
  out << "k=" << model.k << " alpha=" << csv::format_double(model.alpha_prior)
      << " eta=" << csv::format_double(model.eta_prior) << " iterations=" << model.iterations
      << " seed=" << model.seed << " vocab=" << model.vocab.size() << "\n";
  for (int t = 0; t < model.k; ++t) {
    out << "topic " << t << "\n";
    const auto words = top_words(model, t, top_n);
    for (const auto& w : words) {
      const auto idx = std::lower_bound(model.vocab.begin(), model.vocab.end(), w) - model.vocab.begin();
      out << "  " << w << "\t" << csv::format_double(model.beta(t, idx)) << "\n";
    }
  }
  return out.str();
}

}  // namespace eventlens
