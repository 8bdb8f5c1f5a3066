#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "colourlex/categories.hpp"
#include "colourlex/core.hpp"
#include "colourlex/signatures.hpp"

namespace colourlex {

// ---------------------------------------------------------------------------
// N-gram ingestion

struct NgramRecord {
  std::vector<std::string> tokens;  // 1-5 lowercase tokens
  std::int64_t count = 1;
};

struct NgramReadStats {
  std::size_t lines = 0;
  std::size_t records = 0;
  std::size_t malformed = 0;
  std::size_t below_min_count = 0;
};

/// Streams "token token ...<TAB>count" lines from a plain or gzip file.
/// Malformed lines (including a token count other than `n`) are skipped and
/// counted. If more than half of the first 1000 lines are malformed the file
/// is assumed to be of the wrong kind and FormatError is thrown.
class NgramReader {
 public:
  /// n = 0 accepts any arity from 1 to 5. Records with count < min_count are skipped.
  NgramReader(std::string path, std::size_t n, std::int64_t min_count = 0);
  ~NgramReader();
  NgramReader(const NgramReader&) = delete;
  NgramReader& operator=(const NgramReader&) = delete;

  bool next(NgramRecord& record);
  const NgramReadStats& stats() const { return stats_; }

 private:
  bool read_line(std::string& line);
  void check_sample() const;

  struct GzCloser {
    void operator()(void* f) const;
  };
  std::string path_;
  std::size_t n_;
  std::int64_t min_count_;
  std::unique_ptr<void, GzCloser> file_;
  std::vector<char> buffer_;
  NgramReadStats stats_;
  bool sample_checked_ = false;
};

inline constexpr std::size_t kFormatSampleLines = 1000;

/// Parses one n-gram line; nullopt when malformed.
std::optional<NgramRecord> parse_ngram_line(std::string_view line, std::size_t n);

struct NgramFile {
  std::vector<NgramRecord> records;
  NgramReadStats stats;
};

NgramFile load_ngrams(const std::string& path, std::size_t n, std::int64_t min_count = 0);

/// Expands directories into their regular files (sorted); files pass through.
std::vector<std::string> expand_inputs(std::span<const std::string> paths);

/// Lowercase, split on non-alphanumerics, "gray" -> "grey".
std::vector<std::string> tokenize_text(std::string_view text);

// ---------------------------------------------------------------------------
// Colour frequency ranking

struct ColourRanking {
  std::array<double, kColourCount> per_million{};
  std::array<int, kColourCount> rank{};  // 1 = most frequent

  Colour at_rank(int r) const;
  Colour most_frequent() const { return at_rank(1); }
};

/// Ranks by descending frequency; equal frequencies keep B&K order.
ColourRanking ranking_from_frequencies(const std::array<double, kColourCount>& per_million);

/// Accumulates colour unigram counts.
class ColourFrequencyCounter {
 public:
  void add(const NgramRecord& unigram);
  const ColourCounts& counts() const { return counts_; }
  /// Sum of all unigram counts seen (a default for total_tokens).
  std::int64_t tokens_seen() const { return tokens_seen_; }
  ColourRanking ranking(std::int64_t total_tokens) const;

 private:
  ColourCounts counts_;
  std::int64_t tokens_seen_ = 0;
};

ColourRanking colour_frequency_ranking(std::span<const NgramRecord> unigrams, std::int64_t total_tokens);

/// Spearman correlation between a ranking and the B&K ranks.
double spearman_vs_bk(const ColourRanking& ranking);

void write_ranking(std::ostream& out, const ColourRanking& ranking, const ColourCounts& counts);
ColourRanking read_ranking(const std::string& path);

// ---------------------------------------------------------------------------
// Co-occurrence

struct CoocTable {
  std::map<std::string, ColourCounts> rows;  // only non-empty rows are stored

  /// Cell-wise addition.
  CoocTable& merge(const CoocTable& other);
  const ColourCounts* row(const std::string& term) const;
  bool operator==(const CoocTable&) const = default;
};

/// Counts (target token, colour token) pairs at distance <= window. Each
/// pair is weighted by the sequence weight (1 for running text, the n-gram
/// count for n-gram records). A token that is both a target and a colour
/// never pairs with itself.
class CoocCounter {
 public:
  CoocCounter(std::span<const std::string> targets, int window = 4);

  /// One independent token sequence, e.g. an n-gram record.
  void add_sequence(std::span<const std::string> tokens, std::int64_t weight = 1);
  void add_record(const NgramRecord& r) { add_sequence(r.tokens, r.count); }

  /// Streaming running text: tokens are appended to one continuous sequence
  /// until end_text().
  void feed_text_token(std::string_view token);
  void end_text() { recent_.clear(); }

  CoocTable table() const;

 private:
  struct Slot {
    int target = -1;  // index into targets_, -1 if not a target
    int colour = -1;  // colour index, -1 if not a colour
  };
  Slot classify(std::string_view token) const;
  void pair(const Slot& a, const Slot& b, std::int64_t weight);

  std::vector<std::string> targets_;
  std::unordered_map<std::string, int> target_index_;
  int window_;
  std::vector<ColourCounts> rows_;
  std::deque<Slot> recent_;
};

CoocTable window_cooccurrence(std::span<const NgramRecord> records, std::span<const std::string> targets,
                              int window = 4);
CoocTable window_cooccurrence_text(std::string_view text, std::span<const std::string> targets, int window = 4);

/// Splits records into `shards` contiguous chunks counted on separate threads
/// and merged; the result equals the sequential table.
CoocTable window_cooccurrence_sharded(std::span<const NgramRecord> records, std::span<const std::string> targets,
                                      int window, std::size_t shards);

void write_cooc_table(std::ostream& out, const CoocTable& table);
CoocTable read_cooc_table(const std::string& path);

// ---------------------------------------------------------------------------
// Prediction and evaluation

struct Prediction {
  std::string category_id;
  std::optional<Colour> colour;  // nullopt = abstain
  std::string method;
  double score = 0.0;
};

/// Summed co-occurrence counts of the category's members.
ColourCounts category_counts(const ThesaurusCategory& cat, const CoocTable& table);

/// p(colour | category); nullopt when the category never co-occurs with a colour.
std::optional<std::array<double, kColourCount>> category_colour_conditional(const ThesaurusCategory& cat,
                                                                            const CoocTable& table);

Prediction predict_by_cooccurrence(const ThesaurusCategory& cat, const CoocTable& table);

/// Negative iff strictly more members are labelled negative than positive.
Polarity category_polarity(const ThesaurusCategory& cat, const LabelLexicon& polarity_lexicon);

/// Argmax restricted to the colour set of the category's polarity.
Prediction predict_by_cooccurrence_with_polarity(const ThesaurusCategory& cat, const CoocTable& table,
                                                 const LabelLexicon& polarity_lexicon);

enum class BaselineKind { random, corpus_most_frequent, gold_most_frequent };

std::string_view baseline_name(BaselineKind kind);
std::optional<BaselineKind> parse_baseline(std::string_view name);

struct BaselineInputs {
  std::optional<std::uint64_t> seed;
  std::optional<ColourRanking> ranking;
  const GoldStandard* gold = nullptr;
};

/// Throws MissingAuxiliary when the input the baseline needs is absent.
Prediction baseline_predict(BaselineKind kind, const ThesaurusCategory& cat, const BaselineInputs& inputs);

/// Most common gold colour (ties by B&K rank) and its share of the gold standard.
std::pair<Colour, double> gold_modal_colour(const GoldStandard& gold);

/// Percentage of gold categories whose prediction matches; abstentions are
/// wrong. Predictions for non-gold categories are ignored.
double evaluate_accuracy(std::span<const Prediction> predictions, const GoldStandard& gold);

void write_predictions(std::ostream& out, std::span<const Prediction> predictions);
std::vector<Prediction> read_predictions(const std::string& path);

}  // namespace colourlex
