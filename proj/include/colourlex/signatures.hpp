#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "colourlex/core.hpp"

namespace colourlex {

const std::set<std::string>& emotion_labels();
const std::set<std::string>& polarity_labels();

/// Term -> labels. Sense-level lexicons key by (term, category_id); term-level
/// lexicons leave category_id empty.
class LabelLexicon {
 public:
  LabelLexicon(std::set<std::string> inventory, bool sense_level);

  /// Throws UnknownLabel when `label` is outside the inventory.
  void add(const WordSense& key, const std::string& label);

  const std::set<std::string>& inventory() const { return inventory_; }
  bool sense_level() const { return sense_level_; }
  /// Labels for a colour-lexicon sense, honouring the join level.
  const std::set<std::string>& labels_for(const WordSense& sense) const;
  /// Labels of a plain term (union over its senses for sense-level lexicons).
  std::set<std::string> labels_for_term(const std::string& term) const;
  const std::map<WordSense, std::set<std::string>>& associations() const { return associations_; }

 private:
  std::set<std::string> inventory_;
  bool sense_level_;
  std::map<WordSense, std::set<std::string>> associations_;
};

struct SignatureMatrix {
  std::map<std::string, std::array<double, kColourCount>> rows;  // label -> percentage per colour
  std::map<std::string, std::int64_t> support;                   // contributing lexicon entries
};

/// Per label, the distribution of majority colours over colour-lexicon
/// entries carrying that label. Labels without support are omitted.
/// Throws NoOverlap when no entry carries a label.
SignatureMatrix association_signature(const LabelLexicon& labels, std::span<const LexiconEntry> colour_lexicon);

/// The k strongest colours of a row; percentage ties go to the lower B&K rank.
std::vector<std::pair<Colour, double>> top_colours(const SignatureMatrix& matrix, const std::string& label,
                                                   std::size_t k);

/// NRC-style TSV: term, label, flag (3 columns) or term, category_id, label,
/// flag (4 columns, sense-level). Rows with flag 0 are ignored. With no
/// inventory given, every label seen in the file is declared.
LabelLexicon read_label_lexicon(const std::string& path,
                                const std::optional<std::set<std::string>>& inventory = std::nullopt);

void write_signature(std::ostream& out, const SignatureMatrix& matrix);

}  // namespace colourlex
