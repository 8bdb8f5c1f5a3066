#include "colourlex/annotate.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

#include <json.hpp>

#include "colourlex/error.hpp"
#include "colourlex/random.hpp"
#include "colourlex/tsv.hpp"

namespace colourlex {

namespace {

std::string sense_key(const WordSense& s) { return s.term + '\t' + s.category_id; }

std::string describe(const WordSense& s) { return s.term + " [" + s.category_id + "]"; }

std::array<double, kColourCount> percentages(const ColourCounts& counts) {
  std::array<double, kColourCount> out{};
  if (counts.total() == 0) return out;
  for (auto c : colour_order()) {
    out[index_of(c)] = 100.0 * static_cast<double>(counts[c]) / static_cast<double>(counts.total());
  }
  return out;
}

Colour require_colour(const TsvReader& reader, const std::string& name) {
  auto c = parse_colour(name);
  if (!c) reader.fail("unknown colour '" + name + "'");
  return *c;
}

}  // namespace

Hit generate_hit(const WordSense& sense, std::span<const ThesaurusCategory> thesaurus,
                 std::span<const std::string> distractor_pool, std::uint64_t seed) {
  const auto* cat = find_category(thesaurus, sense.category_id);
  if (cat == nullptr) throw Error(ErrorKind::UnknownCategory, "no thesaurus category " + sense.category_id);

  const auto gold = std::find_if(cat->members.begin(), cat->members.end(),
                                 [&](const std::string& m) { return m != sense.term; });
  if (gold == cat->members.end()) {
    throw Error(ErrorKind::NoNearSynonym, "category " + cat->id + " has no member other than " + sense.term);
  }

  const std::set<std::string> in_category(cat->members.begin(), cat->members.end());
  std::set<std::string> candidates;
  for (const auto& t : distractor_pool) {
    if (!in_category.contains(t) && t != sense.term) candidates.insert(t);
  }
  if (candidates.size() < 3) {
    throw Error(ErrorKind::InsufficientDistractors,
                "need 3 distractors outside category " + cat->id + ", pool has " +
                    std::to_string(candidates.size()));
  }

  Rng rng(seed);
  std::vector<std::string> pool(candidates.begin(), candidates.end());
  // Partial Fisher-Yates: the first three slots become the sample.
  for (std::size_t i = 0; i < 3; ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_index(rng, pool.size() - i));
    std::swap(pool[i], pool[j]);
  }

  Hit hit;
  hit.sense = sense;
  hit.q1_gold = *gold;
  hit.q1_options = {pool[0], pool[1], pool[2], *gold};
  shuffle(std::span<std::string>(hit.q1_options), rng);
  hit.q2_options = colour_order();
  shuffle(std::span<Colour>(hit.q2_options), rng);
  return hit;
}

std::string_view status_name(AssignmentStatus s) {
  switch (s) {
    case AssignmentStatus::valid: return "valid";
    case AssignmentStatus::wrong_gold: return "wrong_gold";
    case AssignmentStatus::duplicate: return "duplicate";
  }
  return "unknown";
}

AssignmentStatus validate_assignment(const Assignment& a, const AnswerKey& key) {
  const auto it = key.find(a.sense);
  if (it == key.end()) throw Error(ErrorKind::UnknownSense, "no answer key entry for " + describe(a.sense));
  return to_lower(trim(a.q1_answer)) == to_lower(trim(it->second)) ? AssignmentStatus::valid
                                                                   : AssignmentStatus::wrong_gold;
}

double AggregationReport::discard_rate() const {
  const auto considered = total_assignments - duplicates;
  return considered == 0 ? 0.0 : static_cast<double>(wrong_gold) / static_cast<double>(considered);
}

AggregationResult aggregate(std::span<const Assignment> assignments, const AnswerKey& key,
                            const AggregateOptions& options) {
  if (options.min_valid < 1) throw Error(ErrorKind::InvalidArgument, "min_valid must be >= 1");

  AggregationResult result;
  auto& report = result.report;
  report.total_assignments = assignments.size();

  std::map<WordSense, ColourCounts> votes;
  std::set<std::pair<std::string, WordSense>> seen;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    const auto& a = assignments[i];
    if (!seen.emplace(a.worker_id, a.sense).second) {
      ++report.duplicates;
      report.discarded.push_back({i, a, AssignmentStatus::duplicate});
      continue;
    }
    const auto status = validate_assignment(a, key);
    auto& counts = votes[a.sense];  // senses with zero valid votes still get reported as dropped
    if (status != AssignmentStatus::valid) {
      ++report.wrong_gold;
      report.discarded.push_back({i, a, status});
      continue;
    }
    counts.add(a.q2_answer);
  }

  std::int64_t kept_votes = 0;
  for (const auto& [sense, counts] : votes) {
    if (counts.total() < options.min_valid) {
      report.dropped.push_back({sense, counts.total()});
      continue;
    }
    const auto tied = counts.argmax();
    Colour majority = tied.front();
    if (tied.size() > 1) {
      Rng rng(derive_seed(options.seed, sense_key(sense)));
      majority = tied[uniform_index(rng, tied.size())];
    }
    result.entries.push_back({sense, key.at(sense), counts, majority});
    kept_votes += counts.total();
  }
  if (!result.entries.empty()) {
    report.mean_valid_per_kept = static_cast<double>(kept_votes) / static_cast<double>(result.entries.size());
  }
  return result;
}

AgreementHistogram agreement_histogram(std::span<const LexiconEntry> entries) {
  if (entries.empty()) throw Error(ErrorKind::EmptyLexicon, "agreement histogram of an empty lexicon");
  std::map<std::int64_t, std::int64_t> counts;
  for (std::int64_t size = 1; size <= 5; ++size) counts[size] = 0;
  for (const auto& e : entries) ++counts[e.majority_class_size()];

  AgreementHistogram h;
  const auto n = static_cast<double>(entries.size());
  for (const auto& [size, count] : counts) {
    const double pct = 100.0 * static_cast<double>(count) / n;
    h.share[size] = pct;
    if (size >= 2) h.cumulative_ge2 += pct;
    if (size >= 3) h.cumulative_ge3 += pct;
  }
  return h;
}

double chance_distinct_probability(int n_annotators, int n_colours) {
  if (n_annotators < 1 || n_colours < 1) {
    throw Error(ErrorKind::InvalidArgument, "chance_distinct_probability needs n_annotators, n_colours >= 1");
  }
  double p = 1.0;
  for (int i = 1; i < n_annotators; ++i) {
    p *= static_cast<double>(std::max(n_colours - i, 0)) / static_cast<double>(n_colours);
  }
  return p;
}

std::array<double, kColourCount> colour_distribution(std::span<const LexiconEntry> entries,
                                                     DistributionMode mode) {
  if (entries.empty()) throw Error(ErrorKind::EmptyInput, "colour distribution of an empty lexicon");
  ColourCounts counts;
  for (const auto& e : entries) {
    if (mode == DistributionMode::voted) {
      counts.add(e.majority);
    } else {
      counts += e.votes;
    }
  }
  if (counts.empty()) throw Error(ErrorKind::EmptyInput, "lexicon carries no votes");
  return percentages(counts);
}

std::array<double, kColourCount> colour_distribution(std::span<const Assignment> valid) {
  if (valid.empty()) throw Error(ErrorKind::EmptyInput, "colour distribution of no assignments");
  ColourCounts counts;
  for (const auto& a : valid) counts.add(a.q2_answer);
  return percentages(counts);
}

std::vector<Assignment> read_assignments(const std::string& path) {
  TsvReader reader(path);
  std::vector<Assignment> out;
  std::vector<std::string> f;
  while (reader.next(f)) {
    if (f.size() != 5) reader.fail("expected 5 columns (worker_id, term, category_id, q1_answer, q2_answer)");
    out.push_back({f[0], {to_lower(f[1]), f[2]}, f[3], require_colour(reader, f[4])});
  }
  return out;
}

AnswerKey read_answer_key(const std::string& path) {
  TsvReader reader(path);
  AnswerKey key;
  std::vector<std::string> f;
  while (reader.next(f)) {
    if (f.size() != 3) reader.fail("expected 3 columns (term, category_id, gold_near_synonym)");
    if (!key.emplace(WordSense{to_lower(f[0]), f[1]}, f[2]).second) reader.fail("duplicate sense " + f[0]);
  }
  return key;
}

void write_answer_key(std::ostream& out, std::span<const Hit> hits) {
  out << "#term\tcategory_id\tgold_near_synonym\n";
  for (const auto& h : hits) out << h.sense.term << '\t' << h.sense.category_id << '\t' << h.q1_gold << '\n';
}

void write_hits(std::ostream& out, std::span<const Hit> hits) {
  out << "#term\tcategory_id\tq1_option1\tq1_option2\tq1_option3\tq1_option4\tq1_gold\tq2_options\n";
  for (const auto& h : hits) {
    out << h.sense.term << '\t' << h.sense.category_id;
    for (const auto& o : h.q1_options) out << '\t' << o;
    out << '\t' << h.q1_gold << '\t';
    for (std::size_t i = 0; i < h.q2_options.size(); ++i) {
      out << (i ? "," : "") << colour_name(h.q2_options[i]);
    }
    out << '\n';
  }
}

void write_lexicon_jsonl(std::ostream& out, std::span<const LexiconEntry> entries) {
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["term"] = e.sense.term;
    j["category_id"] = e.sense.category_id;
    j["near_synonym"] = e.near_synonym;
    nlohmann::ordered_json votes;
    for (auto c : colour_order()) votes[std::string(colour_name(c))] = e.votes[c];
    j["votes"] = std::move(votes);
    j["majority"] = colour_name(e.majority);
    j["confidence"] = e.confidence();
    out << j.dump() << '\n';
  }
}

std::vector<LexiconEntry> read_lexicon_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::vector<LexiconEntry> out;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::ParseError, path + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty() || line.front() == '#') continue;
    try {
      const auto j = nlohmann::json::parse(line);
      LexiconEntry e;
      e.sense = {to_lower(j.at("term").get<std::string>()), j.at("category_id").get<std::string>()};
      e.near_synonym = j.at("near_synonym").get<std::string>();
      for (const auto& [name, count] : j.at("votes").items()) {
        auto c = parse_colour(name);
        if (!c) fail("unknown colour '" + name + "'");
        const auto n = count.get<std::int64_t>();
        if (n < 0) fail("negative vote count");
        e.votes.add(*c, n);
      }
      auto majority = parse_colour(j.at("majority").get<std::string>());
      if (!majority) fail("unknown majority colour");
      e.majority = *majority;
      if (e.votes.total() == 0 || e.votes[e.majority] != e.votes.max_count()) {
        fail("majority colour does not attain the maximum vote count");
      }
      out.push_back(std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      fail(ex.what());
    }
  }
  return out;
}

}  // namespace colourlex
