#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "colourlex/core.hpp"

namespace colourlex {

/// One questionnaire: Q1 word choice (near-synonym among random distractors)
/// and Q2 colour choice over all eleven colours in random order.
struct Hit {
  WordSense sense;
  std::array<std::string, 4> q1_options;
  std::string q1_gold;
  std::array<Colour, kColourCount> q2_options{};
};

/// The near-synonym is the first category member other than the term. The
/// three distractors are drawn without replacement from pool terms outside
/// the category; both option lists are shuffled. Deterministic in `seed`.
Hit generate_hit(const WordSense& sense, std::span<const ThesaurusCategory> thesaurus,
                 std::span<const std::string> distractor_pool, std::uint64_t seed);

struct Assignment {
  std::string worker_id;
  WordSense sense;
  std::string q1_answer;
  Colour q2_answer = Colour::white;
};

/// Gold near-synonym per sense.
using AnswerKey = std::map<WordSense, std::string>;

enum class AssignmentStatus { valid, wrong_gold, duplicate };

std::string_view status_name(AssignmentStatus s);

/// valid iff the Q1 answer matches the gold near-synonym (case-insensitive).
/// Throws UnknownSense when the key has no entry for the sense.
AssignmentStatus validate_assignment(const Assignment& a, const AnswerKey& key);

struct DiscardedAssignment {
  std::size_t index;  // position in the input list
  Assignment assignment;
  AssignmentStatus reason;
};

struct DroppedSense {
  WordSense sense;
  std::int64_t valid_annotations;
};

struct AggregationReport {
  std::size_t total_assignments = 0;
  std::size_t wrong_gold = 0;
  std::size_t duplicates = 0;
  std::vector<DiscardedAssignment> discarded;
  std::vector<DroppedSense> dropped;
  double mean_valid_per_kept = 0.0;

  /// Share of (non-duplicate) assignments discarded for a wrong Q1 answer.
  double discard_rate() const;
};

struct AggregateOptions {
  std::int64_t min_valid = 3;
  std::uint64_t seed = 0;
};

struct AggregationResult {
  std::vector<LexiconEntry> entries;  // sorted by sense
  AggregationReport report;
};

/// Majority vote per sense over valid assignments. A worker's repeat
/// assignments for a sense are dropped as duplicates before Q1 validation.
/// Ties are broken uniformly at random with a per-sense seed derived from
/// `options.seed` and the sense, so the result does not depend on input order.
AggregationResult aggregate(std::span<const Assignment> assignments, const AnswerKey& key,
                            const AggregateOptions& options = {});

struct AgreementHistogram {
  /// Percentage of entries per majority class size. Sizes 1-5 are always present.
  std::map<std::int64_t, double> share;
  double cumulative_ge2 = 0.0;
  double cumulative_ge3 = 0.0;
};

AgreementHistogram agreement_histogram(std::span<const LexiconEntry> entries);

/// Probability that n annotators choosing uniformly among k colours all pick
/// different colours.
double chance_distinct_probability(int n_annotators, int n_colours);

enum class DistributionMode { overall, voted };

/// overall: every valid vote of every entry; voted: one majority colour per entry.
std::array<double, kColourCount> colour_distribution(std::span<const LexiconEntry> entries,
                                                     DistributionMode mode);
/// overall distribution over raw (already validated) assignments.
std::array<double, kColourCount> colour_distribution(std::span<const Assignment> valid);

// File formats

std::vector<Assignment> read_assignments(const std::string& path);
AnswerKey read_answer_key(const std::string& path);
void write_answer_key(std::ostream& out, std::span<const Hit> hits);
void write_hits(std::ostream& out, std::span<const Hit> hits);

void write_lexicon_jsonl(std::ostream& out, std::span<const LexiconEntry> entries);
std::vector<LexiconEntry> read_lexicon_jsonl(const std::string& path);

}  // namespace colourlex
