#include "colourlex/wordnet.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "colourlex/error.hpp"
#include "colourlex/tsv.hpp"

namespace colourlex::wordnet {

namespace fs = std::filesystem;

std::optional<PartOfSpeech> parse_pos(char c) {
  switch (c) {
    case 'n': return PartOfSpeech::noun;
    case 'v': return PartOfSpeech::verb;
    case 'a':
    case 's': return PartOfSpeech::adjective;
    case 'r': return PartOfSpeech::adverb;
    default: return std::nullopt;
  }
}

std::string to_string(SynsetId id) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%08u%c", id.offset, static_cast<char>(id.pos));
  return buf;
}

Relation relation_from_symbol(std::string_view symbol) {
  if (symbol == "@") return Relation::hypernym;
  if (symbol == "@i") return Relation::instance_hypernym;
  if (symbol == "~") return Relation::hyponym;
  if (symbol == "~i") return Relation::instance_hyponym;
  if (symbol == "#m" || symbol == "#s" || symbol == "#p") return Relation::holonym;
  if (symbol == "%m" || symbol == "%s" || symbol == "%p") return Relation::meronym;
  return Relation::other;
}

std::vector<SynsetId> Synset::related(Relation r) const {
  std::vector<SynsetId> out;
  for (const auto& p : pointers) {
    if (p.relation == r) out.push_back(p.target);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SynsetId> Synset::hypernyms() const {
  auto out = related(Relation::hypernym);
  auto inst = related(Relation::instance_hypernym);
  out.insert(out.end(), inst.begin(), inst.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SynsetId> Synset::hyponyms() const {
  auto out = related(Relation::hyponym);
  auto inst = related(Relation::instance_hyponym);
  out.insert(out.end(), inst.begin(), inst.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string normalise_lemma(std::string_view lemma) {
  auto out = to_lower(trim(lemma));
  std::replace(out.begin(), out.end(), ' ', '_');
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

[[noreturn]] void parse_fail(const std::string& file, std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, file + ":" + std::to_string(line) + ": " + msg);
}

std::uint32_t parse_offset(const std::string& s, const std::string& file, std::size_t line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    parse_fail(file, line, "bad synset offset '" + s + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(s));
}

// "word(p)" -> "word"
std::string strip_marker(std::string word) {
  if (!word.empty() && word.back() == ')') {
    if (const auto open = word.rfind('('); open != std::string::npos) word.erase(open);
  }
  return to_lower(word);
}

Synset parse_data_line(const std::string& text, const std::string& file, std::size_t line) {
  const auto bar = text.find('|');
  std::istringstream in(text.substr(0, bar));
  Synset s;
  std::string offset, lexfile, type, field;
  if (!(in >> offset >> lexfile >> type) || type.size() != 1) parse_fail(file, line, "truncated synset header");
  auto pos = parse_pos(type[0]);
  if (!pos) parse_fail(file, line, "unknown synset type '" + type + "'");
  s.id = {parse_offset(offset, file, line), *pos};

  if (!(in >> field)) parse_fail(file, line, "missing word count");
  std::size_t w_cnt = 0;
  try {
    w_cnt = std::stoul(field, nullptr, 16);
  } catch (const std::logic_error&) {
    parse_fail(file, line, "bad word count '" + field + "'");
  }
  for (std::size_t i = 0; i < w_cnt; ++i) {
    std::string word, lex_id;
    if (!(in >> word >> lex_id)) parse_fail(file, line, "truncated word list");
    s.lemmas.push_back(strip_marker(word));
  }

  if (!(in >> field)) parse_fail(file, line, "missing pointer count");
  std::size_t p_cnt = 0;
  try {
    p_cnt = std::stoul(field);
  } catch (const std::logic_error&) {
    parse_fail(file, line, "bad pointer count '" + field + "'");
  }
  for (std::size_t i = 0; i < p_cnt; ++i) {
    std::string symbol, target, target_pos, source_target;
    if (!(in >> symbol >> target >> target_pos >> source_target) || target_pos.size() != 1) {
      parse_fail(file, line, "truncated pointer list");
    }
    auto tpos = parse_pos(target_pos[0]);
    if (!tpos) parse_fail(file, line, "unknown pointer pos '" + target_pos + "'");
    s.pointers.push_back({symbol, relation_from_symbol(symbol), {parse_offset(target, file, line), *tpos}});
  }
  // Verb frames (if any) are not needed.

  if (bar != std::string::npos) s.gloss = std::string(trim(std::string_view(text).substr(bar + 1)));
  return s;
}

const std::vector<std::pair<std::string, PartOfSpeech>>& data_files() {
  static const std::vector<std::pair<std::string, PartOfSpeech>> files = {
      {"noun", PartOfSpeech::noun},
      {"verb", PartOfSpeech::verb},
      {"adj", PartOfSpeech::adjective},
      {"adv", PartOfSpeech::adverb}};
  return files;
}

}  // namespace

Database Database::load(const std::string& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorKind::IoError, "not a WordNet directory: " + dir);
  std::vector<Synset> synsets;
  bool any = false;
  for (const auto& [suffix, pos] : data_files()) {
    const auto path = (fs::path(dir) / ("data." + suffix)).string();
    if (!fs::exists(path)) continue;
    any = true;
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
      ++line;
      if (text.starts_with("  ") || trim(text).empty()) continue;  // licence header
      auto s = parse_data_line(text, path, line);
      if (s.id.pos != pos) parse_fail(path, line, "synset type does not match file");
      synsets.push_back(std::move(s));
    }
  }
  if (!any) throw Error(ErrorKind::IoError, "no data.* files in " + dir);

  Database db = from_synsets(std::move(synsets));

  // Cross-check index files: every listed offset must exist.
  for (const auto& [suffix, pos] : data_files()) {
    const auto path = (fs::path(dir) / ("index." + suffix)).string();
    if (!fs::exists(path)) continue;
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
      ++line;
      if (text.starts_with("  ") || trim(text).empty()) continue;
      std::istringstream ls(text);
      std::string lemma, p;
      std::size_t synset_cnt = 0, p_cnt = 0, sense_cnt = 0, tagsense_cnt = 0;
      if (!(ls >> lemma >> p >> synset_cnt >> p_cnt)) parse_fail(path, line, "truncated index entry");
      std::string symbol;
      for (std::size_t i = 0; i < p_cnt; ++i) {
        if (!(ls >> symbol)) parse_fail(path, line, "truncated pointer symbols");
      }
      if (!(ls >> sense_cnt >> tagsense_cnt)) parse_fail(path, line, "missing sense counts");
      for (std::size_t i = 0; i < synset_cnt; ++i) {
        std::string offset;
        if (!(ls >> offset)) parse_fail(path, line, "truncated offset list");
        const SynsetId id{parse_offset(offset, path, line), pos};
        if (db.find(id) == nullptr) {
          throw Error(ErrorKind::DanglingPointer,
                      path + ":" + std::to_string(line) + ": " + lemma + " points to missing synset " + to_string(id));
        }
      }
    }
  }
  return db;
}

Database Database::from_synsets(std::vector<Synset> synsets) {
  Database db;
  db.synsets_ = std::move(synsets);
  std::sort(db.synsets_.begin(), db.synsets_.end(), [](const Synset& a, const Synset& b) { return a.id < b.id; });
  db.link();
  return db;
}

void Database::link() {
  for (std::size_t i = 0; i < synsets_.size(); ++i) {
    if (!by_id_.emplace(synsets_[i].id, i).second) {
      throw Error(ErrorKind::ParseError, "duplicate synset " + to_string(synsets_[i].id));
    }
  }
  for (std::size_t i = 0; i < synsets_.size(); ++i) {
    for (const auto& p : synsets_[i].pointers) {
      if (!by_id_.contains(p.target)) {
        throw Error(ErrorKind::DanglingPointer,
                    to_string(synsets_[i].id) + " " + p.symbol + " points to missing synset " + to_string(p.target));
      }
    }
    std::set<std::string> seen;
    for (auto& lemma : synsets_[i].lemmas) {
      lemma = normalise_lemma(lemma);
      if (seen.insert(lemma).second) by_lemma_[lemma].push_back(i);
    }
  }

  // Hypernym graph must be acyclic: iterative three-colour DFS.
  std::vector<int> state(synsets_.size(), 0);
  for (std::size_t root = 0; root < synsets_.size(); ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto hypers = synsets_[node].hypernyms();
      if (next < hypers.size()) {
        const auto child = by_id_.at(hypers[next++]);
        if (state[child] == 1) {
          throw Error(ErrorKind::ParseError, "hypernym cycle through " + to_string(synsets_[child].id));
        }
        if (state[child] == 0) {
          state[child] = 1;
          stack.emplace_back(child, 0);
        }
      } else {
        state[node] = 2;
        stack.pop_back();
      }
    }
  }
}

const Synset* Database::find(SynsetId id) const {
  const auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &synsets_[it->second];
}

const Synset& Database::at(SynsetId id) const {
  const auto* s = find(id);
  if (s == nullptr) throw Error(ErrorKind::UnknownSynset, "no synset " + to_string(id));
  return *s;
}

std::vector<const Synset*> Database::lookup(std::string_view lemma) const {
  std::vector<const Synset*> out;
  const auto it = by_lemma_.find(normalise_lemma(lemma));
  if (it == by_lemma_.end()) return out;
  for (auto i : it->second) out.push_back(&synsets_[i]);
  return out;
}

std::vector<const Synset*> Database::lookup(std::string_view lemma, PartOfSpeech pos) const {
  auto all = lookup(lemma);
  std::erase_if(all, [&](const Synset* s) { return s->id.pos != pos; });
  return all;
}

// ---------------------------------------------------------------------------
// Information content

InformationContent InformationContent::load(const std::string& path, const Database& db) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::map<SynsetId, double> counts;
  std::vector<std::string> warnings;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto t = trim(text);
    if (t.empty() || t.starts_with("wnver") || t.front() == '#') continue;
    std::istringstream ls{std::string(t)};
    std::string key;
    double count = 0.0;
    if (!(ls >> key >> count) || key.size() < 2) parse_fail(path, line, "expected '<offset><pos> <count>'");
    auto pos = parse_pos(key.back());
    if (!pos) parse_fail(path, line, "unknown pos in '" + key + "'");
    const SynsetId id{parse_offset(key.substr(0, key.size() - 1), path, line), *pos};
    if (count < 0) parse_fail(path, line, "negative count");
    if (db.find(id) == nullptr) {
      warnings.push_back("unknown synset " + to_string(id) + " skipped (" + path + ":" + std::to_string(line) + ")");
      continue;
    }
    counts[id] = count;
  }
  return from_counts(db, counts, std::move(warnings));
}

InformationContent InformationContent::from_counts(const Database& db, const std::map<SynsetId, double>& counts,
                                                   std::vector<std::string> warnings) {
  InformationContent ic;
  ic.warnings_ = std::move(warnings);
  for (const auto& [id, count] : counts) {
    if (count <= 0.0) continue;
    // Root frequency: the largest count among the synset's root ancestors.
    double root_freq = 0.0;
    std::vector<SynsetId> frontier{id};
    std::set<SynsetId> visited{id};
    while (!frontier.empty()) {
      const auto cur = frontier.back();
      frontier.pop_back();
      const auto hypers = db.at(cur).hypernyms();
      if (hypers.empty()) {
        if (const auto it = counts.find(cur); it != counts.end()) root_freq = std::max(root_freq, it->second);
      }
      for (const auto& h : hypers) {
        if (visited.insert(h).second) frontier.push_back(h);
      }
    }
    if (root_freq <= 0.0) {
      ic.warnings_.push_back("no root count for " + to_string(id) + "; IC undefined");
      continue;
    }
    if (count > root_freq) {
      ic.warnings_.push_back("count of " + to_string(id) + " exceeds its root count; IC undefined");
      continue;
    }
    ic.ic_[id] = -std::log(count / root_freq);
  }
  return ic;
}

std::optional<double> InformationContent::ic(SynsetId id) const {
  const auto it = ic_.find(id);
  if (it == ic_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Measures

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::jcn: return "jcn";
    case Measure::lin: return "lin";
    case Measure::lesk: return "lesk";
    case Measure::vector: return "vector";
  }
  return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
  if (name == "jcn") return Measure::jcn;
  if (name == "lin") return Measure::lin;
  if (name == "lesk") return Measure::lesk;
  if (name == "vector") return Measure::vector;
  return std::nullopt;
}

const std::set<std::string>& stop_words() {
  static const std::set<std::string> words = {
      "a",     "about", "above", "after", "again", "against", "all",   "also",  "am",    "an",    "and",
      "any",   "are",   "as",    "at",    "be",    "been",    "being", "both",  "but",   "by",    "can",
      "could", "did",   "do",    "does",  "down",  "during",  "each",  "etc",   "few",   "for",   "from",
      "had",   "has",   "have",  "he",    "her",   "here",    "him",   "his",   "how",   "i",     "if",
      "in",    "into",  "is",    "it",    "its",   "may",     "more",  "most",  "much",  "must",  "no",
      "nor",   "not",   "of",    "off",   "on",    "once",    "one",   "only",  "or",    "other", "our",
      "out",   "over",  "own",   "same",  "she",   "should",  "so",    "some",  "such",  "than",  "that",
      "the",   "their", "them",  "then",  "there", "these",   "they",  "this",  "those", "through", "to",
      "too",   "under", "until", "up",    "upon",  "us",      "very",  "was",   "we",    "were",  "what",
      "when",  "where", "which", "while", "who",   "whom",    "why",   "will",  "with",  "would", "you",
      "your"};
  return words;
}

double gloss_overlap(std::span<const std::string> a, std::span<const std::string> b) {
  const auto& stops = stop_words();
  const std::size_t n = a.size(), m = b.size();
  std::vector<bool> used_a(n, false), used_b(m, false);
  // content_prefix[i] = number of non-stop words among a[0, i)
  std::vector<std::size_t> content_prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) content_prefix[i + 1] = content_prefix[i] + (stops.contains(a[i]) ? 0 : 1);

  auto phrase = [&](std::size_t end_a, std::size_t len) {
    std::string out;
    for (std::size_t k = end_a + 1 - len; k <= end_a; ++k) {
      if (!out.empty()) out += ' ';
      out += a[k];
    }
    return out;
  };

  double score = 0.0;
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  while (true) {
    std::size_t best_len = 0, best_i = 0, best_j = 0;
    std::string best_phrase;
    std::fill(prev.begin(), prev.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      cur[0] = 0;
      for (std::size_t j = 0; j < m; ++j) {
        const bool match = !used_a[i] && !used_b[j] && a[i] == b[j];
        cur[j + 1] = match ? prev[j] + 1 : 0;
        const auto len = cur[j + 1];
        if (len == 0 || len < best_len) continue;
        if (content_prefix[i + 1] - content_prefix[i + 1 - len] == 0) continue;  // only stop words
        const auto start_i = i + 1 - len, start_j = j + 1 - len;
        if (len > best_len) {
          best_len = len;
          best_i = start_i;
          best_j = start_j;
          best_phrase = phrase(i, len);
          continue;
        }
        // Equal length: smallest phrase, then earliest positions. Symmetric in (a, b).
        auto p = phrase(i, len);
        if (p < best_phrase || (p == best_phrase && (start_i < best_i || (start_i == best_i && start_j < best_j)))) {
          best_i = start_i;
          best_j = start_j;
          best_phrase = std::move(p);
        }
      }
      std::swap(prev, cur);
    }
    if (best_len == 0) break;
    // An equal-phrase tie can pair the earliest a-occurrence with a later
    // b-occurrence; move b to its earliest free occurrence of the phrase.
    for (std::size_t j = 0; j + best_len <= m; ++j) {
      bool ok = true;
      for (std::size_t k = 0; k < best_len && ok; ++k) ok = !used_b[j + k] && b[j + k] == a[best_i + k];
      if (ok) {
        best_j = j;
        break;
      }
    }
    for (std::size_t i = 0; i + best_len <= n; ++i) {
      bool ok = true;
      for (std::size_t k = 0; k < best_len && ok; ++k) ok = !used_a[i + k] && a[i + k] == b[best_j + k];
      if (ok) {
        best_i = i;
        break;
      }
    }
    for (std::size_t k = 0; k < best_len; ++k) {
      used_a[best_i + k] = true;
      used_b[best_j + k] = true;
    }
    score += static_cast<double>(best_len * best_len);
  }
  return score;
}

ClosenessEngine::ClosenessEngine(const Database& db, const InformationContent* ic, ClosenessOptions options)
    : db_(db), ic_(ic), options_(options) {
  std::map<std::string, std::size_t> df;
  for (const auto& s : db_.synsets()) {
    std::set<std::string> words;
    for (auto& t : tokenize_text(s.gloss)) {
      if (!stop_words().contains(t)) words.insert(std::move(t));
    }
    for (const auto& w : words) ++df[w];
  }
  const auto n = static_cast<double>(std::max<std::size_t>(1, db_.size()));
  for (const auto& [w, d] : df) idf_[w] = std::log(1.0 + n / static_cast<double>(d));
}

const std::set<SynsetId>& ClosenessEngine::ancestors(SynsetId id) const {
  if (const auto it = ancestors_.find(id); it != ancestors_.end()) return it->second;
  std::set<SynsetId> out{id};
  std::vector<SynsetId> frontier{id};
  while (!frontier.empty()) {
    const auto cur = frontier.back();
    frontier.pop_back();
    for (const auto& h : db_.at(cur).hypernyms()) {
      if (out.insert(h).second) frontier.push_back(h);
    }
  }
  return ancestors_.emplace(id, std::move(out)).first->second;
}

std::optional<SynsetId> ClosenessEngine::lowest_common_subsumer(const Synset& a, const Synset& b) const {
  if (ic_ == nullptr) return std::nullopt;
  const auto& aa = ancestors(a.id);
  const auto& bb = ancestors(b.id);
  std::optional<SynsetId> best;
  double best_ic = -1.0;
  for (const auto& id : aa) {
    if (!bb.contains(id)) continue;
    const auto v = ic_->ic(id);
    if (v && *v > best_ic) {  // ascending id order keeps the smallest id on ties
      best_ic = *v;
      best = id;
    }
  }
  return best;
}

const std::vector<std::string>& ClosenessEngine::gloss_tokens(SynsetId id) const {
  if (const auto it = gloss_tokens_.find(id); it != gloss_tokens_.end()) return it->second;
  return gloss_tokens_.emplace(id, tokenize_text(db_.at(id).gloss)).first->second;
}

// relation: 0 self, 1 hypernyms, 2 hyponyms
std::vector<std::string> ClosenessEngine::relation_gloss(const Synset& s, int relation) const {
  if (relation == 0) return gloss_tokens(s.id);
  std::vector<std::string> out;
  for (const auto& id : relation == 1 ? s.hypernyms() : s.hyponyms()) {
    const auto& t = gloss_tokens(id);
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

const std::map<std::string, double>& ClosenessEngine::gloss_vector(const Synset& s) const {
  if (const auto it = vectors_.find(s.id); it != vectors_.end()) return it->second;
  std::map<std::string, double> v;
  for (int r = 0; r < 3; ++r) {
    for (const auto& t : relation_gloss(s, r)) {
      if (!stop_words().contains(t)) v[t] += 1.0;
    }
  }
  for (auto& [w, tf] : v) {
    const auto it = idf_.find(w);
    tf *= it == idf_.end() ? 0.0 : it->second;
  }
  return vectors_.emplace(s.id, std::move(v)).first->second;
}

double ClosenessEngine::jcn(const Synset& a, const Synset& b) const {
  const auto lcs = lowest_common_subsumer(a, b);
  if (!lcs) return 0.0;
  const double distance = *ic_->ic(a.id) + *ic_->ic(b.id) - 2.0 * *ic_->ic(*lcs);
  if (distance <= options_.jcn_epsilon) return options_.jcn_cap;
  return std::min(1.0 / distance, options_.jcn_cap);
}

double ClosenessEngine::lin(const Synset& a, const Synset& b) const {
  const auto lcs = lowest_common_subsumer(a, b);
  if (!lcs) return 0.0;
  const double denom = *ic_->ic(a.id) + *ic_->ic(b.id);
  if (denom <= 0.0) return 0.0;
  return std::clamp(2.0 * *ic_->ic(*lcs) / denom, 0.0, 1.0);
}

double ClosenessEngine::lesk(const Synset& a, const Synset& b) const {
  double score = 0.0;
  for (int ra = 0; ra < 3; ++ra) {
    const auto ga = relation_gloss(a, ra);
    if (ga.empty()) continue;
    for (int rb = 0; rb < 3; ++rb) {
      const auto gb = relation_gloss(b, rb);
      if (!gb.empty()) score += gloss_overlap(ga, gb);
    }
  }
  return score;
}

double ClosenessEngine::vector(const Synset& a, const Synset& b) const {
  const auto& va = gloss_vector(a);
  const auto& vb = gloss_vector(b);
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const auto& [w, x] : va) {
    na += x * x;
    if (const auto it = vb.find(w); it != vb.end()) dot += x * it->second;
  }
  for (const auto& [w, y] : vb) nb += y * y;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / std::sqrt(na * nb), 0.0, 1.0);
}

namespace {

bool defined_for(const Synset& a, const Synset& b, Measure m, const InformationContent* ic) {
  switch (m) {
    case Measure::jcn:
    case Measure::lin:
      return ic != nullptr && a.id.pos == PartOfSpeech::noun && b.id.pos == PartOfSpeech::noun &&
             ic->ic(a.id).has_value() && ic->ic(b.id).has_value();
    case Measure::lesk:
    case Measure::vector:
      return !trim(a.gloss).empty() && !trim(b.gloss).empty();
  }
  return false;
}

}  // namespace

double ClosenessEngine::synset_closeness(const Synset& a, const Synset& b, Measure m) const {
  if (!defined_for(a, b, m, ic_)) {
    throw Error(ErrorKind::MeasureUnavailable, std::string(measure_name(m)) + " undefined for " + to_string(a.id) +
                                                   ", " + to_string(b.id));
  }
  switch (m) {
    case Measure::jcn: return jcn(a, b);
    case Measure::lin: return lin(a, b);
    case Measure::lesk: return lesk(a, b);
    case Measure::vector: return vector(a, b);
  }
  return 0.0;
}

double ClosenessEngine::word_colour_closeness(std::string_view term, Colour colour, Measure m) const {
  const auto key = std::make_tuple(normalise_lemma(term), colour, m);
  if (const auto it = word_cache_.find(key); it != word_cache_.end()) return it->second;

  const auto term_synsets = db_.lookup(std::get<0>(key));
  if (term_synsets.empty()) missing_terms_.insert(std::get<0>(key));
  auto colour_synsets = db_.lookup(colour_name(colour));
  if (colour == Colour::grey) {
    for (const auto* s : db_.lookup("gray")) {
      if (std::find(colour_synsets.begin(), colour_synsets.end(), s) == colour_synsets.end()) colour_synsets.push_back(s);
    }
  }

  double result = 0.0;
  for (const auto* ts : term_synsets) {
    for (const auto* cs : colour_synsets) {
      if (!defined_for(*ts, *cs, m, ic_)) continue;
      const double v = synset_closeness(*ts, *cs, m);
      result = options_.aggregation == SenseAggregation::max ? std::max(result, v) : result + v;
    }
  }
  word_cache_.emplace(key, result);
  return result;
}

Prediction ClosenessEngine::predict(const ThesaurusCategory& cat, Measure m) const {
  std::set<std::string> members;
  for (const auto& t : cat.members) members.insert(normalise_lemma(t));
  std::array<double, kColourCount> sums{};
  for (const auto& t : members) {
    for (auto c : colour_order()) sums[index_of(c)] += word_colour_closeness(t, c, m);
  }
  Prediction p{cat.id, argmax_colour(sums), "wordnet:" + std::string(measure_name(m)), 0.0};
  if (p.colour) p.score = sums[index_of(*p.colour)];
  return p;
}

Prediction predict_by_wordnet(const ThesaurusCategory& cat, const ClosenessEngine& engine, Measure m) {
  return engine.predict(cat, m);
}

}  // namespace colourlex::wordnet
