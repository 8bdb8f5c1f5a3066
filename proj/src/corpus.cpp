#include "colourlex/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <ostream>
#include <set>
#include <thread>

#include <zlib.h>

#include "colourlex/error.hpp"
#include "colourlex/random.hpp"
#include "colourlex/stats.hpp"
#include "colourlex/tsv.hpp"

namespace colourlex {

// ---------------------------------------------------------------------------
// N-gram ingestion

void NgramReader::GzCloser::operator()(void* f) const {
  if (f != nullptr) gzclose(static_cast<gzFile>(f));
}

NgramReader::NgramReader(std::string path, std::size_t n, std::int64_t min_count)
    : path_(std::move(path)), n_(n), min_count_(min_count), buffer_(1 << 16) {
  if (n_ > 5) throw Error(ErrorKind::InvalidArgument, "n-gram order must be 1-5");
  if (std::filesystem::is_directory(path_)) throw Error(ErrorKind::IoError, path_ + " is a directory");
  gzFile f = gzopen(path_.c_str(), "rb");
  if (f == nullptr) throw Error(ErrorKind::IoError, "cannot open " + path_);
  file_.reset(f);
}

NgramReader::~NgramReader() = default;

bool NgramReader::read_line(std::string& line) {
  line.clear();
  auto* f = static_cast<gzFile>(file_.get());
  while (gzgets(f, buffer_.data(), static_cast<int>(buffer_.size())) != nullptr) {
    line.append(buffer_.data());
    if (!line.empty() && line.back() == '\n') {
      line.pop_back();
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return true;
    }
  }
  int err = Z_OK;
  const char* msg = gzerror(f, &err);
  if (err != Z_OK && err != Z_STREAM_END) throw Error(ErrorKind::IoError, path_ + ": " + msg);
  return !line.empty();
}

void NgramReader::check_sample() const {
  if (stats_.lines > 0 && stats_.malformed * 2 > stats_.lines) {
    throw Error(ErrorKind::FormatError, path_ + ": " + std::to_string(stats_.malformed) + " of the first " +
                                            std::to_string(stats_.lines) +
                                            " lines are not n-gram lines; wrong file?");
  }
}

bool NgramReader::next(NgramRecord& record) {
  std::string line;
  while (read_line(line)) {
    ++stats_.lines;
    auto parsed = parse_ngram_line(line, n_);
    if (!parsed) ++stats_.malformed;
    if (!sample_checked_ && stats_.lines >= kFormatSampleLines) {
      sample_checked_ = true;
      check_sample();
    }
    if (!parsed) continue;
    if (parsed->count < min_count_) {
      ++stats_.below_min_count;
      continue;
    }
    ++stats_.records;
    record = std::move(*parsed);
    return true;
  }
  if (!sample_checked_) {
    sample_checked_ = true;
    check_sample();
  }
  return false;
}

std::optional<NgramRecord> parse_ngram_line(std::string_view line, std::size_t n) {
  const auto tab = line.rfind('\t');
  if (tab == std::string_view::npos) return std::nullopt;
  const auto count_field = trim(line.substr(tab + 1));
  NgramRecord r;
  const auto* end = count_field.data() + count_field.size();
  auto [ptr, ec] = std::from_chars(count_field.data(), end, r.count);
  if (ec != std::errc() || ptr != end || r.count < 1) return std::nullopt;

  const auto text = line.substr(0, tab);
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) r.tokens.push_back(to_lower(text.substr(i, j - i)));
    i = j;
  }
  if (r.tokens.empty() || r.tokens.size() > 5) return std::nullopt;
  if (n != 0 && r.tokens.size() != n) return std::nullopt;
  return r;
}

NgramFile load_ngrams(const std::string& path, std::size_t n, std::int64_t min_count) {
  NgramReader reader(path, n, min_count);
  NgramFile out;
  NgramRecord r;
  while (reader.next(r)) out.records.push_back(std::move(r));
  out.stats = reader.stats();
  return out;
}

std::vector<std::string> expand_inputs(std::span<const std::string> paths) {
  namespace fs = std::filesystem;
  std::vector<std::string> out;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<std::string> files;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file()) files.push_back(entry.path().string());
      }
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else if (fs::exists(p)) {
      out.push_back(p);
    } else {
      throw Error(ErrorKind::IoError, "no such input " + p);
    }
  }
  return out;
}

std::vector<std::string> tokenize_text(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur == "gray") cur = "grey";
    out.push_back(std::move(cur));
    cur.clear();
  };
  for (char ch : text) {
    const auto u = static_cast<unsigned char>(ch);
    // Bytes >= 0x80 belong to UTF-8 sequences; keep them inside tokens.
    if (std::isalnum(u) || u >= 0x80) {
      cur.push_back(static_cast<char>(std::tolower(u)));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

// ---------------------------------------------------------------------------
// Colour frequency ranking

Colour ColourRanking::at_rank(int r) const {
  for (auto c : colour_order()) {
    if (rank[index_of(c)] == r) return c;
  }
  throw Error(ErrorKind::InvariantViolation, "ranking has no colour at rank " + std::to_string(r));
}

ColourRanking ranking_from_frequencies(const std::array<double, kColourCount>& per_million) {
  ColourRanking r;
  r.per_million = per_million;
  std::array<Colour, kColourCount> order = colour_order();
  std::stable_sort(order.begin(), order.end(),
                   [&](Colour a, Colour b) { return per_million[index_of(a)] > per_million[index_of(b)]; });
  for (std::size_t i = 0; i < order.size(); ++i) r.rank[index_of(order[i])] = static_cast<int>(i) + 1;
  return r;
}

void ColourFrequencyCounter::add(const NgramRecord& unigram) {
  if (unigram.tokens.size() != 1) return;
  tokens_seen_ += unigram.count;
  if (auto c = parse_colour(unigram.tokens.front())) counts_.add(*c, unigram.count);
}

ColourRanking ColourFrequencyCounter::ranking(std::int64_t total_tokens) const {
  if (total_tokens <= 0) throw Error(ErrorKind::InvalidArgument, "total_tokens must be positive");
  std::array<double, kColourCount> pm{};
  for (auto c : colour_order()) {
    pm[index_of(c)] = static_cast<double>(counts_[c]) * 1e6 / static_cast<double>(total_tokens);
  }
  return ranking_from_frequencies(pm);
}

ColourRanking colour_frequency_ranking(std::span<const NgramRecord> unigrams, std::int64_t total_tokens) {
  ColourFrequencyCounter counter;
  for (const auto& r : unigrams) counter.add(r);
  return counter.ranking(total_tokens);
}

double spearman_vs_bk(const ColourRanking& ranking) {
  std::vector<double> bk, observed;
  for (auto c : colour_order()) {
    bk.push_back(bk_rank(c));
    observed.push_back(ranking.rank[index_of(c)]);
  }
  return spearman_correlation(bk, observed);
}

void write_ranking(std::ostream& out, const ColourRanking& ranking, const ColourCounts& counts) {
  out << "#colour\tcount\tper_million\trank\tbk_rank\n";
  for (auto c : colour_order()) {
    out << colour_name(c) << '\t' << counts[c] << '\t' << format_fixed(ranking.per_million[index_of(c)], 4) << '\t'
        << ranking.rank[index_of(c)] << '\t' << bk_rank(c) << '\n';
  }
  out << "spearman_vs_bk\t" << format_fixed(spearman_vs_bk(ranking), 4) << '\n';
}

ColourRanking read_ranking(const std::string& path) {
  TsvReader reader(path);
  std::array<double, kColourCount> pm{};
  std::set<Colour> seen;
  std::vector<std::string> f;
  while (reader.next(f)) {
    if (f.front() == "spearman_vs_bk") continue;
    if (f.size() < 3) reader.fail("expected colour, count, per_million");
    auto c = parse_colour(f[0]);
    if (!c) reader.fail("unknown colour '" + f[0] + "'");
    try {
      pm[index_of(*c)] = std::stod(f[2]);
    } catch (const std::logic_error&) {
      reader.fail("malformed per_million value");
    }
    seen.insert(*c);
  }
  if (seen.size() != kColourCount) reader.fail("ranking must list all eleven colours");
  return ranking_from_frequencies(pm);
}

// ---------------------------------------------------------------------------
// Co-occurrence

CoocTable& CoocTable::merge(const CoocTable& other) {
  for (const auto& [term, counts] : other.rows) rows[term] += counts;
  return *this;
}

const ColourCounts* CoocTable::row(const std::string& term) const {
  const auto it = rows.find(term);
  return it == rows.end() ? nullptr : &it->second;
}

CoocCounter::CoocCounter(std::span<const std::string> targets, int window) : window_(window) {
  if (window < 1) throw Error(ErrorKind::InvalidArgument, "window must be >= 1");
  if (targets.empty()) throw Error(ErrorKind::InvalidArgument, "no target terms");
  for (const auto& t : targets) {
    auto key = to_lower(t);
    if (target_index_.emplace(key, static_cast<int>(targets_.size())).second) targets_.push_back(std::move(key));
  }
  rows_.resize(targets_.size());
}

CoocCounter::Slot CoocCounter::classify(std::string_view token) const {
  Slot s;
  if (const auto it = target_index_.find(std::string(token)); it != target_index_.end()) s.target = it->second;
  if (auto c = parse_colour(token)) s.colour = static_cast<int>(index_of(*c));
  return s;
}

void CoocCounter::pair(const Slot& a, const Slot& b, std::int64_t weight) {
  if (a.target >= 0 && b.colour >= 0) rows_[a.target].add(colour_at(b.colour), weight);
  if (b.target >= 0 && a.colour >= 0) rows_[b.target].add(colour_at(a.colour), weight);
}

void CoocCounter::add_sequence(std::span<const std::string> tokens, std::int64_t weight) {
  std::vector<Slot> slots;
  slots.reserve(tokens.size());
  bool any_target = false;
  for (const auto& t : tokens) {
    slots.push_back(classify(t));
    any_target |= slots.back().target >= 0;
  }
  if (!any_target) return;
  const auto w = static_cast<std::size_t>(window_);
  for (std::size_t j = 1; j < slots.size(); ++j) {
    for (std::size_t i = j > w ? j - w : 0; i < j; ++i) pair(slots[i], slots[j], weight);
  }
}

void CoocCounter::feed_text_token(std::string_view token) {
  const Slot s = classify(token);
  if (s.target >= 0 || s.colour >= 0) {
    for (const auto& prev : recent_) pair(prev, s, 1);
  }
  recent_.push_back(s);
  if (recent_.size() > static_cast<std::size_t>(window_)) recent_.pop_front();
}

CoocTable CoocCounter::table() const {
  CoocTable t;
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    if (!rows_[i].empty()) t.rows[targets_[i]] = rows_[i];
  }
  return t;
}

CoocTable window_cooccurrence(std::span<const NgramRecord> records, std::span<const std::string> targets,
                              int window) {
  CoocCounter counter(targets, window);
  for (const auto& r : records) counter.add_record(r);
  return counter.table();
}

CoocTable window_cooccurrence_text(std::string_view text, std::span<const std::string> targets, int window) {
  CoocCounter counter(targets, window);
  for (const auto& tok : tokenize_text(text)) counter.feed_text_token(tok);
  return counter.table();
}

CoocTable window_cooccurrence_sharded(std::span<const NgramRecord> records, std::span<const std::string> targets,
                                      int window, std::size_t shards) {
  shards = std::max<std::size_t>(1, std::min(shards, std::max<std::size_t>(1, records.size())));
  std::vector<CoocTable> partial(shards);
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (records.size() + shards - 1) / shards;
    for (std::size_t s = 0; s < shards; ++s) {
      const std::size_t lo = std::min(records.size(), s * chunk);
      const std::size_t hi = std::min(records.size(), lo + chunk);
      workers.emplace_back([&, s, lo, hi] { partial[s] = window_cooccurrence(records.subspan(lo, hi - lo), targets, window); });
    }
  }
  CoocTable out;
  for (const auto& p : partial) out.merge(p);
  return out;
}

void write_cooc_table(std::ostream& out, const CoocTable& table) {
  out << "#term";
  for (auto c : colour_order()) out << '\t' << colour_name(c);
  out << '\n';
  for (const auto& [term, counts] : table.rows) {
    out << term;
    for (auto v : counts.values()) out << '\t' << v;
    out << '\n';
  }
}

CoocTable read_cooc_table(const std::string& path) {
  TsvReader reader(path);
  CoocTable t;
  std::vector<std::string> f;
  while (reader.next(f)) {
    if (f.size() != kColourCount + 1) reader.fail("expected term and 11 counts");
    ColourCounts counts;
    for (std::size_t i = 0; i < kColourCount; ++i) {
      std::int64_t v = 0;
      const auto& s = f[i + 1];
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) reader.fail("bad count '" + s + "'");
      counts.add(colour_at(i), v);
    }
    t.rows[to_lower(f[0])] += counts;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Prediction and evaluation

namespace {

std::array<double, kColourCount> as_doubles(const ColourCounts& counts) {
  std::array<double, kColourCount> out{};
  for (std::size_t i = 0; i < kColourCount; ++i) out[i] = static_cast<double>(counts.values()[i]);
  return out;
}

std::vector<std::string> unique_members(const ThesaurusCategory& cat) {
  std::vector<std::string> m;
  for (const auto& t : cat.members) m.push_back(to_lower(t));
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

}  // namespace

ColourCounts category_counts(const ThesaurusCategory& cat, const CoocTable& table) {
  ColourCounts sum;
  for (const auto& m : unique_members(cat)) {
    if (const auto* row = table.row(m)) sum += *row;
  }
  return sum;
}

std::optional<std::array<double, kColourCount>> category_colour_conditional(const ThesaurusCategory& cat,
                                                                            const CoocTable& table) {
  const auto sum = category_counts(cat, table);
  if (sum.empty()) return std::nullopt;
  std::array<double, kColourCount> p{};
  for (std::size_t i = 0; i < kColourCount; ++i) {
    p[i] = static_cast<double>(sum.values()[i]) / static_cast<double>(sum.total());
  }
  return p;
}

Prediction predict_by_cooccurrence(const ThesaurusCategory& cat, const CoocTable& table) {
  Prediction p{cat.id, std::nullopt, "cooc", 0.0};
  const auto dist = category_colour_conditional(cat, table);
  if (!dist) return p;
  p.colour = argmax_colour(*dist);
  if (p.colour) p.score = (*dist)[index_of(*p.colour)];
  return p;
}

Polarity category_polarity(const ThesaurusCategory& cat, const LabelLexicon& polarity_lexicon) {
  int pos = 0, neg = 0;
  for (const auto& m : unique_members(cat)) {
    const auto labels = polarity_lexicon.sense_level() ? polarity_lexicon.labels_for({m, cat.id})
                                                       : polarity_lexicon.labels_for_term(m);
    pos += labels.contains("positive") ? 1 : 0;
    neg += labels.contains("negative") ? 1 : 0;
  }
  return neg > pos ? Polarity::negative : Polarity::positive;
}

Prediction predict_by_cooccurrence_with_polarity(const ThesaurusCategory& cat, const CoocTable& table,
                                                 const LabelLexicon& polarity_lexicon) {
  Prediction p{cat.id, std::nullopt, "cooc-polarity", 0.0};
  const auto admissible = polarity_colour_set(category_polarity(cat, polarity_lexicon));
  const auto counts = category_counts(cat, table);
  std::int64_t admissible_total = 0;
  for (auto c : admissible.members()) admissible_total += counts[c];
  if (admissible_total == 0) return p;
  p.colour = argmax_colour(as_doubles(counts), admissible);
  p.score = static_cast<double>(counts[*p.colour]) / static_cast<double>(admissible_total);
  return p;
}

std::string_view baseline_name(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::random: return "random";
    case BaselineKind::corpus_most_frequent: return "corpus";
    case BaselineKind::gold_most_frequent: return "gold";
  }
  return "unknown";
}

std::optional<BaselineKind> parse_baseline(std::string_view name) {
  if (name == "random") return BaselineKind::random;
  if (name == "corpus" || name == "corpus_most_frequent") return BaselineKind::corpus_most_frequent;
  if (name == "gold" || name == "gold_most_frequent") return BaselineKind::gold_most_frequent;
  return std::nullopt;
}

std::pair<Colour, double> gold_modal_colour(const GoldStandard& gold) {
  if (gold.entries.empty()) throw Error(ErrorKind::EmptyInput, "empty gold standard");
  ColourCounts counts;
  for (const auto& [id, e] : gold.entries) counts.add(e.colour);
  const Colour modal = counts.argmax().front();
  return {modal, static_cast<double>(counts[modal]) / static_cast<double>(counts.total())};
}

Prediction baseline_predict(BaselineKind kind, const ThesaurusCategory& cat, const BaselineInputs& inputs) {
  Prediction p{cat.id, std::nullopt, "baseline:" + std::string(baseline_name(kind)), 0.0};
  switch (kind) {
    case BaselineKind::random: {
      if (!inputs.seed) throw Error(ErrorKind::MissingAuxiliary, "random baseline needs a seed");
      Rng rng(derive_seed(*inputs.seed, cat.id));
      p.colour = colour_at(uniform_index(rng, kColourCount));
      p.score = 1.0 / static_cast<double>(kColourCount);
      break;
    }
    case BaselineKind::corpus_most_frequent: {
      if (!inputs.ranking) throw Error(ErrorKind::MissingAuxiliary, "corpus baseline needs a colour ranking");
      p.colour = inputs.ranking->most_frequent();
      p.score = inputs.ranking->per_million[index_of(*p.colour)];
      break;
    }
    case BaselineKind::gold_most_frequent: {
      if (inputs.gold == nullptr) throw Error(ErrorKind::MissingAuxiliary, "gold baseline needs a gold standard");
      const auto [colour, share] = gold_modal_colour(*inputs.gold);
      p.colour = colour;
      p.score = share;
      break;
    }
  }
  return p;
}

double evaluate_accuracy(std::span<const Prediction> predictions, const GoldStandard& gold) {
  if (gold.entries.empty()) throw Error(ErrorKind::EmptyInput, "empty gold standard");
  std::map<std::string, const Prediction*> by_category;
  for (const auto& p : predictions) {
    if (!gold.entries.contains(p.category_id)) continue;
    if (!by_category.emplace(p.category_id, &p).second) {
      throw Error(ErrorKind::InvalidArgument, "more than one prediction for category " + p.category_id);
    }
  }
  std::size_t correct = 0;
  for (const auto& [id, e] : gold.entries) {
    const auto it = by_category.find(id);
    if (it == by_category.end()) throw Error(ErrorKind::MissingPrediction, "no prediction for category " + id);
    if (it->second->colour == e.colour) ++correct;
  }
  return 100.0 * static_cast<double>(correct) / static_cast<double>(gold.entries.size());
}

void write_predictions(std::ostream& out, std::span<const Prediction> predictions) {
  out << "#category_id\tmethod\tcolour\tscore\n";
  for (const auto& p : predictions) {
    out << p.category_id << '\t' << p.method << '\t' << (p.colour ? colour_name(*p.colour) : "ABSTAIN") << '\t'
        << format_fixed(p.score, 6) << '\n';
  }
}

std::vector<Prediction> read_predictions(const std::string& path) {
  TsvReader reader(path);
  std::vector<Prediction> out;
  std::vector<std::string> f;
  while (reader.next(f)) {
    if (f.size() != 4) reader.fail("expected category_id, method, colour, score");
    Prediction p{f[0], std::nullopt, f[1], 0.0};
    if (f[2] != "ABSTAIN") {
      p.colour = parse_colour(f[2]);
      if (!p.colour) reader.fail("unknown colour '" + f[2] + "'");
    }
    try {
      p.score = std::stod(f[3]);
    } catch (const std::logic_error&) {
      reader.fail("malformed score");
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace colourlex
