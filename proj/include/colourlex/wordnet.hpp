#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "colourlex/core.hpp"
#include "colourlex/corpus.hpp"

namespace colourlex::wordnet {

enum class PartOfSpeech : char { noun = 'n', verb = 'v', adjective = 'a', adverb = 'r' };

/// Maps a WordNet pos letter to a part of speech; satellites ('s') are adjectives.
std::optional<PartOfSpeech> parse_pos(char c);

struct SynsetId {
  std::uint32_t offset = 0;
  PartOfSpeech pos = PartOfSpeech::noun;

  auto operator<=>(const SynsetId&) const = default;
};

std::string to_string(SynsetId id);

enum class Relation {
  hypernym,
  instance_hypernym,
  hyponym,
  instance_hyponym,
  holonym,
  meronym,
  other,
};

Relation relation_from_symbol(std::string_view symbol);

struct Pointer {
  std::string symbol;
  Relation relation = Relation::other;
  SynsetId target;
};

struct Synset {
  SynsetId id;
  std::vector<std::string> lemmas;  // lowercase, underscores for spaces
  std::string gloss;
  std::vector<Pointer> pointers;

  /// Targets of one relation type, sorted.
  std::vector<SynsetId> related(Relation r) const;
  /// hypernym and instance_hypernym targets, sorted.
  std::vector<SynsetId> hypernyms() const;
  /// hyponym and instance_hyponym targets, sorted.
  std::vector<SynsetId> hyponyms() const;
};

/// Immutable synset graph; safe to share between threads.
class Database {
 public:
  /// Reads data.{noun,verb,adj,adv} (and checks index.* when present) from a
  /// directory in the standard WordNet text layout.
  static Database load(const std::string& dir);
  /// Builds a database from already-parsed synsets (validates links).
  static Database from_synsets(std::vector<Synset> synsets);

  const Synset* find(SynsetId id) const;
  const Synset& at(SynsetId id) const;
  /// All synsets listing the lemma (any part of speech), in id order.
  std::vector<const Synset*> lookup(std::string_view lemma) const;
  std::vector<const Synset*> lookup(std::string_view lemma, PartOfSpeech pos) const;

  std::span<const Synset> synsets() const { return synsets_; }
  std::size_t size() const { return synsets_.size(); }

 private:
  void link();

  std::vector<Synset> synsets_;  // sorted by id
  std::map<SynsetId, std::size_t> by_id_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_lemma_;
};

/// Normalises a lookup key: lowercase, spaces become underscores.
std::string normalise_lemma(std::string_view lemma);

/// Per-synset information content, -log(freq(s) / freq(root)).
class InformationContent {
 public:
  /// File lines "<offset><pos> <count> [ROOT]" holding cumulative frequencies
  /// (each count already includes its descendants). A leading "wnver" line is
  /// skipped. Unknown synsets are skipped and listed in warnings().
  static InformationContent load(const std::string& path, const Database& db);
  static InformationContent from_counts(const Database& db, const std::map<SynsetId, double>& counts,
                                        std::vector<std::string> warnings = {});

  /// nullopt when the synset (or its root) has no positive count.
  std::optional<double> ic(SynsetId id) const;
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::map<SynsetId, double> ic_;
  std::vector<std::string> warnings_;
};

enum class Measure { jcn, lin, lesk, vector };

std::string_view measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view name);

enum class SenseAggregation { max, sum };

struct ClosenessOptions {
  double jcn_cap = 1e6;         // jcn value when the distance is <= jcn_epsilon
  double jcn_epsilon = 1e-12;
  SenseAggregation aggregation = SenseAggregation::max;
};

/// The built-in stop-word list used by the gloss measures.
const std::set<std::string>& stop_words();

/// Extended-gloss overlap score of two token sequences: repeatedly take the
/// longest shared run of words (runs made only of stop words do not count),
/// add its squared length and remove it from both sides.
double gloss_overlap(std::span<const std::string> a, std::span<const std::string> b);

/// Closeness computations over one database. Holds memo tables, so give each
/// worker thread its own engine.
class ClosenessEngine {
 public:
  ClosenessEngine(const Database& db, const InformationContent* ic = nullptr, ClosenessOptions options = {});

  /// Throws MeasureUnavailable when the measure's preconditions do not hold
  /// (jcn/lin: both nouns with IC; lesk/vector: non-empty glosses).
  double synset_closeness(const Synset& a, const Synset& b, Measure m) const;

  /// Aggregate over all (term synset, colour synset) pairs where the measure
  /// is defined. 0 when the term or colour is missing from the database.
  double word_colour_closeness(std::string_view term, Colour colour, Measure m) const;

  /// Sums member closeness per colour and picks the largest (B&K tie-break);
  /// abstains when every sum is 0.
  Prediction predict(const ThesaurusCategory& cat, Measure m) const;

  /// Lowest common subsumer with the highest IC, if any.
  std::optional<SynsetId> lowest_common_subsumer(const Synset& a, const Synset& b) const;

  /// Terms queried so far that are not in the database.
  const std::set<std::string>& missing_terms() const { return missing_terms_; }

 private:
  const std::set<SynsetId>& ancestors(SynsetId id) const;
  const std::vector<std::string>& gloss_tokens(SynsetId id) const;
  std::vector<std::string> relation_gloss(const Synset& s, int relation) const;
  const std::map<std::string, double>& gloss_vector(const Synset& s) const;

  double jcn(const Synset& a, const Synset& b) const;
  double lin(const Synset& a, const Synset& b) const;
  double lesk(const Synset& a, const Synset& b) const;
  double vector(const Synset& a, const Synset& b) const;

  const Database& db_;
  const InformationContent* ic_;
  ClosenessOptions options_;
  std::map<std::string, double> idf_;

  mutable std::map<SynsetId, std::set<SynsetId>> ancestors_;
  mutable std::map<SynsetId, std::vector<std::string>> gloss_tokens_;
  mutable std::map<SynsetId, std::map<std::string, double>> vectors_;
  mutable std::map<std::tuple<std::string, Colour, Measure>, double> word_cache_;
  mutable std::set<std::string> missing_terms_;
};

Prediction predict_by_wordnet(const ThesaurusCategory& cat, const ClosenessEngine& engine, Measure m);

}  // namespace colourlex::wordnet
