#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colourlex/core.hpp"

namespace colourlex {

/// Sense-level lookup into a colour lexicon.
class LexiconIndex {
 public:
  explicit LexiconIndex(std::span<const LexiconEntry> entries);

  const LexiconEntry* find(const std::string& term, const std::string& category_id) const;
  /// All senses of a spelling, in lexicon order.
  std::vector<const LexiconEntry*> senses_of(const std::string& term) const;

 private:
  std::map<WordSense, const LexiconEntry*> by_sense_;
  std::multimap<std::string, const LexiconEntry*> by_term_;
};

struct CategoryColourScore {
  std::string category_id;
  Colour best_colour = Colour::white;
  std::int64_t best_count = 0;
  std::int64_t n_annotated = 0;

  double strength() const { return static_cast<double>(best_count) / static_cast<double>(n_annotated); }
};

/// Fraction of a category's annotated members whose majority colour is the
/// category's most common one. Ties between colours go to the lower B&K rank.
/// nullopt (ineligible) when fewer than `min_members` members are annotated.
std::optional<CategoryColourScore> category_colour_strength(const ThesaurusCategory& cat,
                                                            const LexiconIndex& lexicon,
                                                            std::int64_t min_members = 4);

/// Scores of every eligible category, in thesaurus order.
std::vector<CategoryColourScore> score_categories(std::span<const ThesaurusCategory> categories,
                                                  const LexiconIndex& lexicon, std::int64_t min_members = 4);

struct GoldEntry {
  std::string head;
  Colour colour = Colour::white;
  double strength = 0.0;
  std::int64_t n_annotated = 0;
};

struct GoldStandard {
  std::map<std::string, GoldEntry> entries;  // by category id
  double threshold = 0.5;
};

GoldStandard extract_gold_standard(std::span<const ThesaurusCategory> categories, const LexiconIndex& lexicon,
                                   double threshold = 0.5, std::int64_t min_members = 4);

/// Ratings on the 100-700 scale.
struct ImageabilityTable {
  std::map<std::string, int> ratings;
};

/// Mean rating of members that are both annotated (for this category) and rated.
std::optional<double> category_imageability(const ThesaurusCategory& cat, const ImageabilityTable& ratings,
                                            const LexiconIndex& lexicon);

struct ScatterPoint {
  std::string category_id;
  double imageability = 0.0;
  double strength = 0.0;
};

/// Categories that are eligible for strength and have an imageability value.
std::vector<ScatterPoint> imageability_scatter(std::span<const ThesaurusCategory> categories,
                                               const ImageabilityTable& ratings, const LexiconIndex& lexicon,
                                               std::int64_t min_members = 4);

// File formats

ImageabilityTable read_imageability(const std::string& path);
void write_gold_standard(std::ostream& out, const GoldStandard& gold);
GoldStandard read_gold_standard(const std::string& path);
void write_category_scores(std::ostream& out, std::span<const CategoryColourScore> scores,
                           std::span<const ThesaurusCategory> categories);
void write_scatter(std::ostream& out, std::span<const ScatterPoint> points);

}  // namespace colourlex
