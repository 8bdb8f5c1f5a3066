// Acceptance gate: one PASS/FAIL line per criterion.
// usage: acceptance_tests <path-to-colourlex-binary>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "colourlex/annotate.hpp"
#include "colourlex/categories.hpp"
#include "colourlex/corpus.hpp"
#include "colourlex/random.hpp"
#include "colourlex/signatures.hpp"
#include "colourlex/stats.hpp"
#include "colourlex/wordnet.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace colourlex;
namespace fs = std::filesystem;

namespace {

std::string g_cli;

/// Collects failure notes for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  std::size_t failed = 0;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

/// Runs the CLI with stdout captured to `capture`; returns the exit status.
int run_cli(const std::vector<std::string>& args, const std::string& capture) {
  std::string cmd = quote(g_cli);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " >" + quote(capture) + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

// ---------------------------------------------------------------------------

void criterion1(Check& c) {
  const double p = chance_distinct_probability(5, 11);
  c.expect(std::abs(p - 0.344) <= 0.0005, "chance(5,11)=" + fmt(p));
  c.expect(std::abs(p - 5040.0 / 14641.0) < 1e-12, "chance(5,11) not 5040/14641");
  c.expect(chance_distinct_probability(12, 11) == 0.0, "chance(12,11) != 0");
  for (int k = 1; k <= 20; ++k) c.expect(chance_distinct_probability(1, k) == 1.0, "chance(1,k) != 1");
}

void criterion2(Check& c) {
  const std::vector<double> bk = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  const std::vector<double> bnc = {4, 1, 2, 3, 10, 5, 6, 8, 11, 9, 7};
  const std::vector<double> gbc = {1, 2, 3, 4, 7, 5, 6, 9, 10, 11, 8};
  const std::vector<double> gnc = {2, 1, 3, 5, 6, 4, 7, 8, 11, 9, 10};
  const double rb = spearman_correlation(bk, bnc), rg = spearman_correlation(bk, gbc),
               rn = spearman_correlation(bk, gnc);
  c.expect(std::abs(rb - 0.727) <= 0.001, "BNC rho=" + fmt(rb));
  c.expect(std::abs(rg - 0.918) <= 0.001, "GBC rho=" + fmt(rg));
  // printed as 0.884; the no-ties formula on the printed ranks gives 0.936
  c.expect(std::abs(rn - 0.936) <= 0.001, "GNC rho=" + fmt(rn));
  const std::vector<int> ibk(bk.begin(), bk.end()), ign(gnc.begin(), gnc.end());
  c.expect(std::abs(rn - oracle::spearman_no_ties(ibk, ign)) < 1e-12, "GNC disagrees with the no-ties formula");
}

void criterion3(Check& c) {
  Rng rng(20240501);
  AnswerKey key;
  std::vector<Assignment> as;
  for (int s = 0; s < 10000; ++s) {
    const WordSense sense{"term" + std::to_string(s), "cat" + std::to_string(s % 97)};
    key[sense] = "syn";
    for (int w = 0; w < 5; ++w) as.push_back({"w" + std::to_string(w), sense, "syn", colour_at(uniform_index(rng, 11))});
  }
  const auto res = aggregate(as, key, {.min_valid = 3, .seed = 1});
  c.expect(res.entries.size() == 10000, "entries=" + std::to_string(res.entries.size()));
  const auto h = agreement_histogram(res.entries);
  const double share1 = h.share.at(1) / 100.0;
  c.expect(std::abs(share1 - 0.344) <= 0.02, "size-1 share=" + fmt(share1));
}

void criterion4(Check& c) {
  for (std::uint64_t trial = 0; trial < 5; ++trial) {
    Rng rng(1000 + trial);
    AnswerKey key;
    std::vector<Assignment> as;
    std::size_t planted_wrong = 0, planted_dup = 0;
    const std::int64_t min_valid = 3;
    for (int s = 0; s < 1000; ++s) {
      const WordSense sense{"t" + std::to_string(s), "c" + std::to_string(s % 50)};
      const std::string gold = "g" + std::to_string(s % 13);
      key[sense] = gold;
      const auto valid = uniform_index(rng, 8);  // 0-7, some senses fall under min_valid
      std::vector<Assignment> rows;
      for (std::uint64_t w = 0; w < valid; ++w) {
        // mixed case answers are still correct
        rows.push_back({"v" + std::to_string(w), sense, w % 3 == 0 ? to_lower(gold) : "G" + gold.substr(1),
                        colour_at(uniform_index(rng, 11))});
      }
      const auto wrong = uniform_index(rng, 3);
      for (std::uint64_t w = 0; w < wrong; ++w) {
        rows.push_back({"x" + std::to_string(w), sense, "not-" + gold, colour_at(uniform_index(rng, 11))});
        ++planted_wrong;
      }
      // repeats by the same worker, later in the file, with a different colour
      const auto dups = rows.empty() ? 0 : uniform_index(rng, 3);
      std::vector<Assignment> repeats;
      for (std::uint64_t d = 0; d < dups; ++d) {
        auto r = rows[uniform_index(rng, rows.size())];
        r.q2_answer = colour_at(uniform_index(rng, 11));
        repeats.push_back(r);
        ++planted_dup;
      }
      as.insert(as.end(), rows.begin(), rows.end());
      as.insert(as.end(), repeats.begin(), repeats.end());
    }
    const auto res = aggregate(as, key, {.min_valid = min_valid, .seed = trial});
    const auto& rep = res.report;
    c.expect(rep.wrong_gold == planted_wrong,
             "wrong-Q1 discards " + std::to_string(rep.wrong_gold) + " vs planted " + std::to_string(planted_wrong));
    c.expect(rep.duplicates == planted_dup,
             "duplicates " + std::to_string(rep.duplicates) + " vs planted " + std::to_string(planted_dup));
    std::size_t reported_wrong = 0;
    for (const auto& d : rep.discarded) reported_wrong += d.reason == AssignmentStatus::wrong_gold ? 1 : 0;
    c.expect(reported_wrong == planted_wrong, "discard list wrong-Q1 count mismatch");
    c.expect(rep.total_assignments == as.size(), "total_assignments mismatch");
    for (const auto& e : res.entries) {
      const double conf = static_cast<double>(e.votes[e.majority]) / static_cast<double>(e.votes.total());
      c.expect(e.confidence() == conf, "confidence != majority/total for " + e.sense.term);
      c.expect(e.votes.total() >= min_valid, "entry under min_valid: " + e.sense.term);
      c.expect(e.votes[e.majority] == e.votes.max_count(), "majority is not a maximum for " + e.sense.term);
    }
    for (const auto& d : rep.dropped) c.expect(d.valid_annotations < min_valid, "dropped sense had enough votes");
    // determinism under reordering once duplicates are gone
    const auto again = aggregate(as, key, {.min_valid = min_valid, .seed = trial});
    c.expect(again.entries.size() == res.entries.size(), "aggregate not deterministic");
    for (std::size_t i = 0; i < res.entries.size() && i < again.entries.size(); ++i) {
      c.expect(again.entries[i].majority == res.entries[i].majority, "aggregate not deterministic");
    }
  }
}

void criterion5(Check& c) {
  Rng rng(55);
  std::vector<ThesaurusCategory> cats;
  std::vector<LexiconEntry> lex;
  std::set<std::string> floor_ids;
  for (int i = 0; i < 500; ++i) {
    ThesaurusCategory cat{"k" + std::to_string(i), "h" + std::to_string(i), {}};
    std::vector<Colour> colours;
    const bool floor = i % 2 == 0;
    if (floor) {
      std::vector<Colour> all(colour_order().begin(), colour_order().end());
      shuffle(std::span<Colour>(all), rng);
      colours.assign(all.begin(), all.begin() + 4);
      floor_ids.insert(cat.id);
    } else {
      const auto n = 4 + uniform_index(rng, 6);
      for (std::uint64_t k = 0; k < n; ++k) colours.push_back(colour_at(uniform_index(rng, 3)));
    }
    for (std::size_t m = 0; m < colours.size(); ++m) {
      const auto term = cat.id + "_" + std::to_string(m);
      cat.members.push_back(term);
      LexiconEntry e;
      e.sense = {term, cat.id};
      e.votes.add(colours[m], 3);
      e.majority = colours[m];
      lex.push_back(e);
    }
    cats.push_back(cat);
  }
  const LexiconIndex index(lex);
  const auto scores = score_categories(cats, index);
  std::set<std::string> scored;
  for (const auto& s : scores) {
    scored.insert(s.category_id);
    c.expect(s.strength() >= 0.25 || s.n_annotated > 4, "4-member strength below 0.25");
    if (floor_ids.contains(s.category_id)) c.expect(s.strength() == 0.25, "floor category strength " + fmt(s.strength()));
  }
  for (const auto& id : floor_ids) c.expect(scored.contains(id), "floor category not scored: " + id);
  const auto gold = extract_gold_standard(cats, index, 0.5);
  for (const auto& id : floor_ids) c.expect(!gold.entries.contains(id), "floor category in gold: " + id);
  for (const auto& [id, e] : gold.entries) c.expect(e.strength >= 0.5, "gold entry below threshold");
  c.expect(!gold.entries.empty(), "gold standard unexpectedly empty");
}

std::vector<NgramRecord> toy_corpus(Rng& rng, const std::vector<std::string>& targets) {
  static const std::vector<std::string> filler = {"the", "of", "gray", "and", "very", "a", "in"};
  std::vector<NgramRecord> out;
  const auto n = 1 + uniform_index(rng, 1000);
  for (std::uint64_t i = 0; i < n; ++i) {
    NgramRecord r;
    r.count = 1 + static_cast<std::int64_t>(uniform_index(rng, 200));
    for (int k = 0; k < 5; ++k) {
      const auto pick = uniform_index(rng, 3);
      if (pick == 0) r.tokens.push_back(targets[uniform_index(rng, targets.size())]);
      else if (pick == 1) r.tokens.push_back(oracle::colour_words()[uniform_index(rng, 11)]);
      else r.tokens.push_back(filler[uniform_index(rng, filler.size())]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

void criterion6(Check& c) {
  Rng rng(66);
  testutil::TempDir dir("acc6");
  std::set<int> all;
  for (int i = 0; i < 11; ++i) all.insert(i);
  for (int corpus = 0; corpus < 100; ++corpus) {
    const auto n_targets = 1 + uniform_index(rng, 20);
    std::vector<std::string> targets;
    for (std::uint64_t t = 0; t < n_targets; ++t) targets.push_back("t" + std::to_string(t));
    // a colour word as a target exercises the no-self-pair rule
    if (corpus % 10 == 0) targets.push_back("red");
    const auto recs = toy_corpus(rng, targets);
    const auto table = window_cooccurrence(recs, targets, 4);

    std::vector<oracle::Gram> grams;
    for (const auto& r : recs) {
      std::vector<std::string> toks;
      for (const auto& t : r.tokens) toks.push_back(t == "gray" ? "grey" : t);
      grams.push_back({toks, r.count});
    }
    const auto ref = oracle::recount(grams, {targets.begin(), targets.end()}, 4);

    for (int k = 0; k < 10; ++k) {
      ThesaurusCategory cat{"c" + std::to_string(k), "h", {}};
      const auto m = 1 + uniform_index(rng, 5);
      for (std::uint64_t i = 0; i < m; ++i) cat.members.push_back(targets[uniform_index(rng, targets.size())]);
      std::array<std::int64_t, 11> sum{};
      for (const auto& t : std::set<std::string>(cat.members.begin(), cat.members.end())) {
        if (const auto it = ref.find(t); it != ref.end()) {
          for (int i = 0; i < 11; ++i) sum[i] += it->second[i];
        }
      }
      const auto want = oracle::argmax_by_sort(sum, all);
      const auto got = predict_by_cooccurrence(cat, table).colour;
      const bool same = got.has_value() == want.has_value() && (!got || static_cast<int>(index_of(*got)) == *want);
      c.expect(same, "corpus " + std::to_string(corpus) + " category " + cat.id + " disagrees with the oracle");
    }

    for (std::size_t shards : {1U, 2U, 8U}) {
      c.expect(window_cooccurrence_sharded(recs, targets, 4, shards) == table,
               "sharded table differs at " + std::to_string(shards) + " shards");
    }

    // CLI: spread the corpus over 8 files and compare --parallel 1/2/8 bytes
    const auto cdir = dir.path() / ("corpus" + std::to_string(corpus));
    fs::create_directories(cdir);
    std::vector<std::ofstream> files;
    for (int f = 0; f < 8; ++f) files.emplace_back(cdir / ("part" + std::to_string(f) + ".txt"));
    for (std::size_t i = 0; i < recs.size(); ++i) {
      auto& out = files[uniform_index(rng, 8)];
      for (std::size_t k = 0; k < recs[i].tokens.size(); ++k) out << (k ? " " : "") << recs[i].tokens[k];
      out << '\t' << recs[i].count << '\n';
    }
    files.clear();
    std::string tpath = dir.write("targets" + std::to_string(corpus) + ".txt", [&] {
      std::string s;
      for (const auto& t : targets) s += t + "\n";
      return s;
    }());
    std::string first;
    for (const char* par : {"1", "2", "8"}) {
      const auto out = dir.file("cooc" + std::to_string(corpus) + "_" + par + ".tsv");
      const int rc = run_cli({"cooc", "--mode", "5gram", "--input", cdir.string(), "--targets", tpath, "--window", "4",
                              "--parallel", par, "--out", dir.file("cooc" + std::to_string(corpus) + ".tsv")},
                             out + ".stdout");
      c.expect(rc == 0, "cli cooc exit " + std::to_string(rc));
      const auto bytes = testutil::slurp(dir.file("cooc" + std::to_string(corpus) + ".tsv"));
      if (first.empty()) {
        first = bytes;
        const auto cli_table = read_cooc_table(dir.file("cooc" + std::to_string(corpus) + ".tsv"));
        c.expect(cli_table == table, "cli table differs from library table");
      } else {
        c.expect(bytes == first, "cli --parallel " + std::string(par) + " output differs");
      }
    }
  }
}

void criterion7(Check& c) {
  Rng rng(77);
  const auto neg = polarity_colour_set(Polarity::negative);
  for (int trial = 0; trial < 2000; ++trial) {
    LabelLexicon lex(polarity_labels(), false);
    CoocTable table;
    ThesaurusCategory cat{"k" + std::to_string(trial), "h", {}};
    const auto m = 1 + uniform_index(rng, 6);
    for (std::uint64_t i = 0; i < m; ++i) {
      const auto term = "w" + std::to_string(i);
      cat.members.push_back(term);
      const auto l = uniform_index(rng, 3);
      if (l == 1) lex.add({term, ""}, "positive");
      if (l == 2) lex.add({term, ""}, "negative");
      const auto cells = uniform_index(rng, 4);
      for (std::uint64_t k = 0; k < cells; ++k) table.rows[term].add(colour_at(uniform_index(rng, 11)), 1 + uniform_index(rng, 9));
    }
    const auto pol = category_polarity(cat, lex);
    const auto p = predict_by_cooccurrence_with_polarity(cat, table, lex);
    if (p.colour) {
      c.expect(polarity_colour_set(pol).contains(*p.colour), "prediction outside the polarity set");
      c.expect(p.score > 0, "non-abstain prediction with score 0");
    }
  }
  LabelLexicon lex(polarity_labels(), false);
  lex.add({"grief", ""}, "negative");
  lex.add({"gloom", ""}, "negative");
  lex.add({"hope", ""}, "positive");
  CoocTable t;
  t.rows["grief"].add(Colour::white, 50);
  t.rows["grief"].add(Colour::grey, 10);
  t.rows["gloom"].add(Colour::white, 30);
  t.rows["gloom"].add(Colour::black, 12);
  t.rows["hope"].add(Colour::white, 5);
  const ThesaurusCategory planted{"sad", "sadness", {"grief", "gloom", "hope"}};
  c.expect(category_polarity(planted, lex) == Polarity::negative, "planted category not negative");
  c.expect(predict_by_cooccurrence(planted, t).colour == Colour::white, "planted raw argmax is not white");
  const auto p = predict_by_cooccurrence_with_polarity(planted, t, lex);
  c.expect(p.colour && neg.contains(*p.colour), "planted negative category predicted outside the negative set");
  c.expect(p.colour == Colour::black, "planted negative category should pick black");
}

void criterion8(Check& c) {
  Rng rng(88);
  for (int trial = 0; trial < 50; ++trial) {
    GoldStandard gold;
    const auto n = 1 + uniform_index(rng, 300);
    for (std::uint64_t i = 0; i < n; ++i) {
      // skewed colours so the mode is not always white
      const auto col = colour_at(std::min<std::uint64_t>(uniform_index(rng, 11), uniform_index(rng, 11)));
      gold.entries["g" + std::to_string(i)] = {"h", col, 0.5, 4};
    }
    std::vector<Prediction> preds;
    BaselineInputs in;
    in.gold = &gold;
    for (const auto& [id, e] : gold.entries) preds.push_back(baseline_predict(BaselineKind::gold_most_frequent, {id, "h", {}}, in));
    const auto [modal, share] = gold_modal_colour(gold);
    std::array<int, kColourCount> counts{};
    for (const auto& [id, e] : gold.entries) ++counts[index_of(e.colour)];
    const int best = *std::max_element(counts.begin(), counts.end());
    c.expect(counts[index_of(modal)] == best, "modal colour is not the most frequent");
    // exact: correct predictions == modal count, and both sides use the same division
    std::size_t correct = 0;
    for (const auto& p : preds) correct += p.colour == gold.entries.at(p.category_id).colour ? 1 : 0;
    c.expect(correct == static_cast<std::size_t>(best), "gold baseline correct count != modal count");
    const double n_gold = static_cast<double>(gold.entries.size());
    c.expect(share == static_cast<double>(best) / n_gold, "modal share " + fmt(share) + " miscomputed");
    const double acc = evaluate_accuracy(preds, gold);
    c.expect(acc == 100.0 * static_cast<double>(best) / n_gold,
             "gold baseline accuracy " + fmt(acc) + " != modal share " + fmt(100.0 * share));
  }

  GoldStandard gold;
  for (int i = 0; i < 10000; ++i) gold.entries["cat" + std::to_string(i)] = {"h", colour_at(uniform_index(rng, 11)), 0.5, 4};
  BaselineInputs in;
  in.seed = 2012;
  std::vector<Prediction> preds;
  for (const auto& [id, e] : gold.entries) preds.push_back(baseline_predict(BaselineKind::random, {id, "h", {}}, in));
  const double acc = evaluate_accuracy(preds, gold);
  c.expect(std::abs(acc - 9.1) <= 1.0, "random baseline accuracy " + fmt(acc));
}

void criterion9(Check& c) {
  LabelLexicon anger(emotion_labels(), true);
  anger.add({"rage", "c1"}, "anger");
  anger.add({"fury", "c1"}, "anger");
  std::vector<LexiconEntry> two(2);
  two[0].sense = {"rage", "c1"};
  two[1].sense = {"fury", "c1"};
  for (auto& e : two) {
    e.votes.add(Colour::red, 3);
    e.majority = Colour::red;
  }
  const auto m = association_signature(anger, two);
  c.expect(m.rows.size() == 1 && m.rows.at("anger")[index_of(Colour::red)] == 100.0, "anger fixture not red 100");

  Rng rng(99);
  const std::vector<std::string> emos(emotion_labels().begin(), emotion_labels().end());
  for (int trial = 0; trial < 200; ++trial) {
    const bool sense_level = trial % 2 == 0;
    LabelLexicon labels(trial % 3 == 0 ? polarity_labels() : emotion_labels(), sense_level);
    const std::vector<std::string> inv(labels.inventory().begin(), labels.inventory().end());
    std::vector<LexiconEntry> lex;
    const auto n = 1 + uniform_index(rng, 200);
    for (std::uint64_t i = 0; i < n; ++i) {
      LexiconEntry e;
      e.sense = {"w" + std::to_string(uniform_index(rng, 80)), "c" + std::to_string(uniform_index(rng, 5))};
      e.majority = colour_at(uniform_index(rng, 11));
      e.votes.add(e.majority, 3);
      lex.push_back(e);
      if (uniform_index(rng, 2)) labels.add(e.sense, inv[uniform_index(rng, inv.size())]);
    }
    if (labels.associations().empty()) continue;
    const auto sig = association_signature(labels, lex);
    for (const auto& [label, row] : sig.rows) {
      const double sum = std::accumulate(row.begin(), row.end(), 0.0);
      c.expect(std::abs(sum - 100.0) <= 0.1, "row " + label + " sums to " + fmt(sum));
      c.expect(std::all_of(row.begin(), row.end(), [](double v) { return v >= 0.0; }), "negative cell");
      c.expect(sig.support.at(label) >= 1, "row without support");
    }
  }
}

void criterion10(Check& c) {
  using namespace colourlex::wordnet;
  const std::string base = std::string(COLOURLEX_TEST_DATA) + "/wordnet";
  const auto db = Database::load(base + "/dict");
  const auto ic = InformationContent::load(base + "/ic-fixture.dat", db);
  ClosenessEngine e(db, &ic);
  std::size_t lin_checked = 0;
  for (const auto& s : db.synsets()) {
    if (s.id.pos == PartOfSpeech::noun && ic.ic(s.id).value_or(0) > 0) {
      c.expect(std::abs(e.synset_closeness(s, s, Measure::lin) - 1.0) < 1e-12, "lin(s,s) != 1 for " + to_string(s.id));
      ++lin_checked;
    }
  }
  c.expect(lin_checked > 10, "too few noun synsets checked");
  for (auto m : {Measure::jcn, Measure::lin, Measure::lesk, Measure::vector}) {
    for (const auto& a : db.synsets()) {
      for (const auto& b : db.synsets()) {
        const bool ic_measure = m == Measure::jcn || m == Measure::lin;
        if (ic_measure && (a.id.pos != PartOfSpeech::noun || b.id.pos != PartOfSpeech::noun)) continue;
        const double ab = e.synset_closeness(a, b, m), ba = e.synset_closeness(b, a, m);
        c.expect(ab == ba, std::string(measure_name(m)) + " asymmetric on " + to_string(a.id) + "," + to_string(b.id));
      }
    }
    const double red = e.word_colour_closeness("inflammation", Colour::red, m);
    for (auto col : colour_order()) {
      if (col == Colour::red) continue;
      c.expect(red > e.word_colour_closeness("inflammation", col, m),
               std::string(measure_name(m)) + ": red not strictly first over " + std::string(colour_name(col)));
    }
    c.expect(e.predict({"x", "inflammation", {"inflammation"}}, m).colour == Colour::red,
             std::string(measure_name(m)) + " does not predict red");
  }
}

void criterion11(Check& c) {
  testutil::TempDir dir("acc11");
  const auto data = std::string(COLOURLEX_TEST_DATA) + "/wordnet";
  const auto thesaurus = dir.write("thesaurus.tsv",
                                   "c1\tfire\tfire,flame,blaze,ember\n"
                                   "c2\tsea\tsea,ocean,wave,tide\n"
                                   "c3\tsick\tinflammation,fever,rash,sore\n");
  const auto pool = dir.write("pool.txt", "car\ntree\nolive\nstone\n");
  Rng rng(111);
  std::string key, rows;
  const std::vector<std::string> terms = {"fire", "flame", "blaze", "ember", "sea", "ocean", "wave", "tide",
                                          "inflammation", "fever", "rash", "sore"};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string cat = "c" + std::to_string(i / 4 + 1);
    key += terms[i] + "\t" + cat + "\tsyn\n";
    for (int w = 0; w < 5; ++w) {
      const auto col = colour_name(colour_at(uniform_index(rng, 4)));
      rows += "w" + std::to_string(w) + "\t" + terms[i] + "\t" + cat + "\t" + (w == 4 ? "bad" : "syn") + "\t" +
              std::string(col) + "\n";
    }
  }
  const auto key_path = dir.write("key.tsv", key);
  const auto asg = dir.write("asg.tsv", rows);
  const auto labels = dir.write("labels.tsv", "fire\tanger\t1\nsea\tjoy\t1\nwave\tjoy\t1\nrash\tdisgust\t1\n");
  const auto pol = dir.write("pol.tsv", "fire\tnegative\t1\nrash\tnegative\t1\nsore\tnegative\t1\nsea\tpositive\t1\n");
  const auto uni = dir.write("uni.txt", "red\t30\nwhite\t50\nblue\t20\nthe\t900\n");
  fs::create_directories(dir.path() / "grams");
  dir.write("grams/a.txt", "a red flame in the\t4\nthe blue sea and white\t9\n");
  dir.write("grams/b.txt", "sore red rash on skin\t3\nwave of white foam and\t2\n");
  const auto text = dir.write("text.txt", "The red flame and the blue sea. A white wave; a red rash.\n");
  const auto img = dir.write("img.tsv", "fire\t600\nsea\t650\nfever\t300\nwave\t550\n");

  auto f = [&](const std::string& n) { return dir.file(n); };
  struct Cmd {
    std::string name;
    std::vector<std::string> args;
    std::vector<std::string> outputs;
  };
  const std::vector<Cmd> cmds = {
      {"hitgen", {"hitgen", "--thesaurus", thesaurus, "--pool", pool, "--seed", "4", "--out", f("hits.tsv"), "--answer-key", f("hkey.tsv")}, {f("hits.tsv"), f("hkey.tsv")}},
      {"aggregate", {"aggregate", "--assignments", asg, "--answer-key", key_path, "--seed", "9", "--min-valid", "3", "--out", f("lex.jsonl"), "--report", f("report.tsv")}, {f("lex.jsonl"), f("report.tsv")}},
      {"stats", {"stats", "--lexicon", f("lex.jsonl"), "--out", f("stats.tsv")}, {f("stats.tsv")}},
      {"categories", {"categories", "--thesaurus", thesaurus, "--lexicon", f("lex.jsonl"), "--imageability", img, "--gold-threshold", "0.25", "--out", f("gold.tsv"), "--scores", f("scores.tsv"), "--scatter", f("scatter.tsv"), "--summary", f("summary.tsv")}, {f("gold.tsv"), f("scores.tsv"), f("scatter.tsv"), f("summary.tsv")}},
      {"signature", {"signature", "--labels", labels, "--lexicon", f("lex.jsonl"), "--top", "2", "--out", f("sig.tsv")}, {f("sig.tsv")}},
      {"rank", {"rank", "--unigrams", uni, "--out", f("rank.tsv")}, {f("rank.tsv")}},
      {"cooc", {"cooc", "--mode", "5gram", "--input", (dir.path() / "grams").string(), "--thesaurus", thesaurus, "--parallel", "2", "--out", f("cooc.tsv")}, {f("cooc.tsv")}},
      {"cooc text", {"cooc", "--mode", "text", "--input", text, "--thesaurus", thesaurus, "--out", f("cooct.tsv")}, {f("cooct.tsv")}},
      {"predict cooc", {"predict", "--method", "cooc", "--thesaurus", thesaurus, "--gold", f("gold.tsv"), "--cooc", f("cooc.tsv"), "--out", f("p1.tsv")}, {f("p1.tsv")}},
      {"predict cooc-polarity", {"predict", "--method", "cooc-polarity", "--thesaurus", thesaurus, "--gold", f("gold.tsv"), "--cooc", f("cooc.tsv"), "--polarity", pol, "--fallback", "random", "--seed", "3", "--out", f("p2.tsv")}, {f("p2.tsv")}},
      {"predict wordnet", {"predict", "--method", "wordnet:vector", "--thesaurus", thesaurus, "--gold", f("gold.tsv"), "--wordnet", data + "/dict", "--ic", data + "/ic-fixture.dat", "--out", f("p3.tsv")}, {f("p3.tsv")}},
      {"predict baseline:random", {"predict", "--method", "baseline:random", "--seed", "7", "--thesaurus", thesaurus, "--gold", f("gold.tsv"), "--out", f("p4.tsv")}, {f("p4.tsv")}},
      {"predict baseline:corpus", {"predict", "--method", "baseline:corpus", "--ranking", f("rank.tsv"), "--thesaurus", thesaurus, "--gold", f("gold.tsv"), "--out", f("p5.tsv")}, {f("p5.tsv")}},
      {"evaluate", {"evaluate", "--gold", f("gold.tsv"), "--predictions", f("p1.tsv"), f("p2.tsv"), f("p3.tsv"), f("p4.tsv"), f("p5.tsv"), "--out", f("eval.tsv")}, {f("eval.tsv")}},
  };
  for (const auto& cmd : cmds) {
    std::vector<std::string> first;
    for (int pass = 0; pass < 2; ++pass) {
      const auto stdout_path = f("stdout.txt");
      const int rc = run_cli(cmd.args, stdout_path);
      c.expect(rc == 0, cmd.name + " exit " + std::to_string(rc));
      std::vector<std::string> bytes;
      for (const auto& o : cmd.outputs) bytes.push_back(testutil::slurp(o));
      bytes.push_back(testutil::slurp(stdout_path));
      for (const auto& o : cmd.outputs) c.expect(testutil::slurp(o).starts_with("# colourlex "), cmd.name + ": missing header in " + o);
      if (pass == 0) first = bytes;
      else c.expect(bytes == first, cmd.name + ": outputs differ between runs");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_tests <colourlex binary>\n";
    return 2;
  }
  g_cli = argv[1];
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"1 chance model", criterion1},
      {"2 rank correlations vs printed ranks", criterion2},
      {"3 size-1 agreement share near chance", criterion3},
      {"4 aggregation invariants and planted discards", criterion4},
      {"5 category strength floor 0.25", criterion5},
      {"6 co-occurrence oracle and shard identity", criterion6},
      {"7 polarity-restricted prediction", criterion7},
      {"8 baseline identities", criterion8},
      {"9 signature rows sum to 100", criterion9},
      {"10 wordnet measures on the fixture", criterion10},
      {"11 cli determinism", criterion11},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.failed == 0 ? "PASS" : "FAIL") << "  criterion " << name;
    if (c.failed) {
      std::cout << "  (" << c.failed << " failed checks";
      for (const auto& f : c.failures) std::cout << "; " << f;
      std::cout << ")";
      ++failed;
    }
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
