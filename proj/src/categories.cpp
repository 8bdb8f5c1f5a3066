#include "colourlex/categories.hpp"

#include <ostream>

#include "colourlex/error.hpp"
#include "colourlex/tsv.hpp"

namespace colourlex {

LexiconIndex::LexiconIndex(std::span<const LexiconEntry> entries) {
  for (const auto& e : entries) {
    if (by_sense_.emplace(e.sense, &e).second) by_term_.emplace(e.sense.term, &e);
  }
}

const LexiconEntry* LexiconIndex::find(const std::string& term, const std::string& category_id) const {
  const auto it = by_sense_.find(WordSense{term, category_id});
  return it == by_sense_.end() ? nullptr : it->second;
}

std::vector<const LexiconEntry*> LexiconIndex::senses_of(const std::string& term) const {
  std::vector<const LexiconEntry*> out;
  auto [lo, hi] = by_term_.equal_range(term);
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  return out;
}

std::optional<CategoryColourScore> category_colour_strength(const ThesaurusCategory& cat,
                                                            const LexiconIndex& lexicon,
                                                            std::int64_t min_members) {
  ColourCounts majorities;
  for (const auto& m : cat.members) {
    if (const auto* e = lexicon.find(m, cat.id)) majorities.add(e->majority);
  }
  if (majorities.total() < min_members || majorities.empty()) return std::nullopt;
  // argmax() lists tied colours in B&K order.
  const Colour best = majorities.argmax().front();
  return CategoryColourScore{cat.id, best, majorities[best], majorities.total()};
}

std::vector<CategoryColourScore> score_categories(std::span<const ThesaurusCategory> categories,
                                                  const LexiconIndex& lexicon, std::int64_t min_members) {
  std::vector<CategoryColourScore> out;
  for (const auto& cat : categories) {
    if (auto s = category_colour_strength(cat, lexicon, min_members)) out.push_back(std::move(*s));
  }
  return out;
}

GoldStandard extract_gold_standard(std::span<const ThesaurusCategory> categories, const LexiconIndex& lexicon,
                                   double threshold, std::int64_t min_members) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "gold threshold must lie in (0, 1]");
  }
  GoldStandard gold;
  gold.threshold = threshold;
  for (const auto& cat : categories) {
    const auto s = category_colour_strength(cat, lexicon, min_members);
    if (!s) continue;
    // Compare on counts so 2/4 against 0.5 is not at the mercy of rounding.
    if (static_cast<double>(s->best_count) + 1e-9 >= threshold * static_cast<double>(s->n_annotated)) {
      gold.entries[cat.id] = {cat.head, s->best_colour, s->strength(), s->n_annotated};
    }
  }
  return gold;
}

std::optional<double> category_imageability(const ThesaurusCategory& cat, const ImageabilityTable& ratings,
                                            const LexiconIndex& lexicon) {
  double sum = 0.0;
  int n = 0;
  for (const auto& m : cat.members) {
    if (lexicon.find(m, cat.id) == nullptr) continue;
    const auto it = ratings.ratings.find(m);
    if (it == ratings.ratings.end()) continue;
    sum += it->second;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

std::vector<ScatterPoint> imageability_scatter(std::span<const ThesaurusCategory> categories,
                                               const ImageabilityTable& ratings, const LexiconIndex& lexicon,
                                               std::int64_t min_members) {
  std::vector<ScatterPoint> out;
  for (const auto& cat : categories) {
    const auto s = category_colour_strength(cat, lexicon, min_members);
    if (!s) continue;
    const auto img = category_imageability(cat, ratings, lexicon);
    if (!img) continue;
    out.push_back({cat.id, *img, s->strength()});
  }
  return out;
}

ImageabilityTable read_imageability(const std::string& path) {
  TsvReader reader(path);
  ImageabilityTable table;
  std::vector<std::string> f;
  while (reader.next(f)) {
    if (f.size() != 2) reader.fail("expected 2 columns (term, rating)");
    int rating = 0;
    try {
      std::size_t used = 0;
      rating = std::stoi(f[1], &used);
      if (used != f[1].size()) reader.fail("rating is not an integer");
    } catch (const std::logic_error&) {
      reader.fail("rating is not an integer");
    }
    if (rating < 100 || rating > 700) reader.fail("rating outside 100-700");
    table.ratings[to_lower(f[0])] = rating;
  }
  return table;
}

void write_gold_standard(std::ostream& out, const GoldStandard& gold) {
  out << "#category_id\thead\tcolour\tstrength\tn_annotated\n";
  for (const auto& [id, e] : gold.entries) {
    out << id << '\t' << e.head << '\t' << colour_name(e.colour) << '\t' << format_fixed(e.strength, 4) << '\t'
        << e.n_annotated << '\n';
  }
}

GoldStandard read_gold_standard(const std::string& path) {
  TsvReader reader(path);
  GoldStandard gold;
  std::vector<std::string> f;
  while (reader.next(f)) {
    if (f.size() < 3) reader.fail("expected at least 3 columns (category_id, head, colour)");
    auto c = parse_colour(f[2]);
    if (!c) reader.fail("unknown colour '" + f[2] + "'");
    GoldEntry e{f[1], *c, 0.0, 0};
    try {
      if (f.size() > 3) e.strength = std::stod(f[3]);
      if (f.size() > 4) e.n_annotated = std::stoll(f[4]);
    } catch (const std::logic_error&) {
      reader.fail("malformed strength or n_annotated");
    }
    if (!gold.entries.emplace(f[0], std::move(e)).second) reader.fail("duplicate category " + f[0]);
  }
  return gold;
}

void write_category_scores(std::ostream& out, std::span<const CategoryColourScore> scores,
                           std::span<const ThesaurusCategory> categories) {
  out << "#category_id\thead\tcolour\tstrength\tn_annotated\n";
  for (const auto& s : scores) {
    const auto* cat = find_category(categories, s.category_id);
    out << s.category_id << '\t' << (cat ? cat->head : "") << '\t' << colour_name(s.best_colour) << '\t'
        << format_fixed(s.strength(), 4) << '\t' << s.n_annotated << '\n';
  }
}

void write_scatter(std::ostream& out, std::span<const ScatterPoint> points) {
  out << "#category_id\timageability\tstrength\n";
  for (const auto& p : points) {
    out << p.category_id << '\t' << format_fixed(p.imageability, 2) << '\t' << format_fixed(p.strength, 4) << '\n';
  }
}

}  // namespace colourlex
