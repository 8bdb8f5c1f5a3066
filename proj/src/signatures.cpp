#include "colourlex/signatures.hpp"

#include <algorithm>
#include <ostream>

#include "colourlex/error.hpp"
#include "colourlex/tsv.hpp"

namespace colourlex {

const std::set<std::string>& emotion_labels() {
  static const std::set<std::string> labels = {"anger", "anticipation", "disgust", "fear",
                                               "joy",   "sadness",      "surprise", "trust"};
  return labels;
}

const std::set<std::string>& polarity_labels() {
  static const std::set<std::string> labels = {"positive", "negative"};
  return labels;
}

LabelLexicon::LabelLexicon(std::set<std::string> inventory, bool sense_level)
    : inventory_(std::move(inventory)), sense_level_(sense_level) {}

void LabelLexicon::add(const WordSense& key, const std::string& label) {
  if (!inventory_.contains(label)) throw Error(ErrorKind::UnknownLabel, "label '" + label + "' not in inventory");
  WordSense k{key.term, sense_level_ ? key.category_id : std::string()};
  associations_[std::move(k)].insert(label);
}

const std::set<std::string>& LabelLexicon::labels_for(const WordSense& sense) const {
  static const std::set<std::string> none;
  const auto it = associations_.find(WordSense{sense.term, sense_level_ ? sense.category_id : std::string()});
  return it == associations_.end() ? none : it->second;
}

std::set<std::string> LabelLexicon::labels_for_term(const std::string& term) const {
  std::set<std::string> out;
  for (auto it = associations_.lower_bound(WordSense{term, ""}); it != associations_.end() && it->first.term == term;
       ++it) {
    out.insert(it->second.begin(), it->second.end());
  }
  return out;
}

SignatureMatrix association_signature(const LabelLexicon& labels, std::span<const LexiconEntry> colour_lexicon) {
  std::map<std::string, ColourCounts> counts;
  for (const auto& e : colour_lexicon) {
    for (const auto& label : labels.labels_for(e.sense)) counts[label].add(e.majority);
  }
  if (counts.empty()) throw Error(ErrorKind::NoOverlap, "no colour-lexicon entry carries a label");

  SignatureMatrix m;
  for (const auto& [label, row] : counts) {
    std::array<double, kColourCount> pct{};
    for (auto c : colour_order()) {
      pct[index_of(c)] = 100.0 * static_cast<double>(row[c]) / static_cast<double>(row.total());
    }
    m.rows[label] = pct;
    m.support[label] = row.total();
  }
  return m;
}

std::vector<std::pair<Colour, double>> top_colours(const SignatureMatrix& matrix, const std::string& label,
                                                   std::size_t k) {
  const auto it = matrix.rows.find(label);
  if (it == matrix.rows.end()) throw Error(ErrorKind::UnknownLabel, "no signature row for '" + label + "'");
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "top_colours needs k >= 1");
  std::vector<std::pair<Colour, double>> row;
  for (auto c : colour_order()) row.emplace_back(c, it->second[index_of(c)]);
  // stable_sort keeps B&K order among equal percentages
  std::stable_sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  row.resize(std::min(k, row.size()));
  return row;
}

LabelLexicon read_label_lexicon(const std::string& path, const std::optional<std::set<std::string>>& inventory) {
  struct Row {
    WordSense key;
    std::string label;
  };
  TsvReader reader(path);
  std::vector<Row> rows;
  std::optional<std::size_t> width;
  std::set<std::string> seen;
  std::vector<std::string> f;
  while (reader.next(f)) {
    if (f.size() != 3 && f.size() != 4) reader.fail("expected term, [category_id,] label, flag");
    if (width && *width != f.size()) reader.fail("mixed 3- and 4-column rows");
    width = f.size();
    const auto& flag = f.back();
    if (flag != "0" && flag != "1") reader.fail("flag must be 0 or 1");
    if (flag == "0") continue;
    Row r;
    r.key.term = to_lower(f[0]);
    if (f.size() == 4) r.key.category_id = f[1];
    r.label = to_lower(f[f.size() - 2]);
    if (inventory && !inventory->contains(r.label)) {
      throw Error(ErrorKind::UnknownLabel,
                  path + ":" + std::to_string(reader.line_number()) + ": label '" + r.label + "' not in inventory");
    }
    seen.insert(r.label);
    rows.push_back(std::move(r));
  }
  LabelLexicon lex(inventory ? *inventory : seen, width.value_or(3) == 4);
  for (const auto& r : rows) lex.add(r.key, r.label);
  return lex;
}

void write_signature(std::ostream& out, const SignatureMatrix& matrix) {
  out << "#label";
  for (auto c : colour_order()) out << '\t' << colour_name(c);
  out << "\tsupport\n";
  for (const auto& [label, row] : matrix.rows) {
    out << label;
    for (double v : row) out << '\t' << format_fixed(v, 1);
    out << '\t' << matrix.support.at(label) << '\n';
  }
}

}  // namespace colourlex
