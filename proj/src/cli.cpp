#include "colourlex/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "colourlex/annotate.hpp"
#include "colourlex/categories.hpp"
#include "colourlex/corpus.hpp"
#include "colourlex/error.hpp"
#include "colourlex/random.hpp"
#include "colourlex/signatures.hpp"
#include "colourlex/stats.hpp"
#include "colourlex/tsv.hpp"
#include "colourlex/wordnet.hpp"

namespace colourlex::cli {

namespace {

/// Options excluded from the recorded RunConfig because they cannot change output.
bool recorded(const CLI::Option* opt) { return opt->get_name() != "--parallel" && opt->get_name() != "--help"; }

/// "<subcommand> --flag=value ..." in declaration order.
std::string run_config(CLI::App* sub) {
  std::string out(sub->get_name());
  for (const auto* opt : sub->get_options()) {
    if (opt->count() == 0 || !recorded(opt)) continue;
    out += ' ';
    out += opt->get_name();
    for (const auto& r : opt->results()) {
      out += (&r == &opt->results().front()) ? "=" : ",";
      out += r;
    }
  }
  return out;
}

/// Writes the header comment plus `body` to `path`, or to `out` when path is empty.
void emit(const std::string& path, std::ostream& out, const std::string& config,
          const std::function<void(std::ostream&)>& body) {
  std::ostringstream buf;
  buf << header_comment(config) << '\n';
  body(buf);
  if (path.empty()) {
    out << buf.str();
    return;
  }
  auto file = open_output(path);
  file << buf.str();
  if (!file) throw Error(ErrorKind::IoError, "write failed: " + path);
}

std::string tsv_row(const std::array<double, kColourCount>& values, int decimals) {
  std::string s;
  for (double v : values) s += '\t' + format_fixed(v, decimals);
  return s;
}

std::vector<std::string> read_terms(const std::string& path) {
  TsvReader reader(path);
  std::vector<std::string> out;
  std::vector<std::string> f;
  while (reader.next(f)) out.push_back(to_lower(f.front()));
  return out;
}

// ---------------------------------------------------------------------------

struct Options {
  std::string thesaurus, out, answer_key, pool, assignments, report, lexicon, imageability, scores, scatter, summary,
      labels, inventory = "auto", mode = "5gram", targets, method, gold, cooc, polarity, wordnet_dir, ic, measure,
      ranking, fallback, sense_aggregation = "max";
  std::vector<std::string> inputs, predictions;
  std::uint64_t seed = 0;
  std::int64_t min_valid = 3, min_members = 4, min_count = 0, total_tokens = 0;
  double gold_threshold = 0.5;
  int window = 4, top = 0;
  unsigned parallel = 1;
  bool has_seed = false;
};

void cmd_hitgen(const Options& o, const std::string& config, std::ostream& out, std::ostream& err) {
  const auto thesaurus = read_thesaurus(o.thesaurus);
  std::vector<std::string> pool;
  if (!o.pool.empty()) {
    pool = read_terms(o.pool);
  } else {
    for (const auto& c : thesaurus) pool.insert(pool.end(), c.members.begin(), c.members.end());
  }
  std::vector<Hit> hits;
  std::size_t skipped = 0;
  for (const auto& cat : thesaurus) {
    for (const auto& term : cat.members) {
      const WordSense sense{term, cat.id};
      try {
        hits.push_back(generate_hit(sense, thesaurus, pool, derive_seed(o.seed, term + '\t' + cat.id)));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoNearSynonym) throw;
        ++skipped;
      }
    }
  }
  emit(o.out, out, config, [&](std::ostream& s) { write_hits(s, hits); });
  if (!o.answer_key.empty()) emit(o.answer_key, out, config, [&](std::ostream& s) { write_answer_key(s, hits); });
  err << "hitgen: " << hits.size() << " HITs, " << skipped << " senses without a near-synonym skipped\n";
}

void cmd_aggregate(const Options& o, const std::string& config, std::ostream& out, std::ostream& err) {
  const auto assignments = read_assignments(o.assignments);
  const auto key = read_answer_key(o.answer_key);
  const auto result = aggregate(assignments, key, {o.min_valid, o.seed});
  emit(o.out, out, config, [&](std::ostream& s) { write_lexicon_jsonl(s, result.entries); });
  const auto& r = result.report;
  if (!o.report.empty()) {
    emit(o.report, out, config, [&](std::ostream& s) {
      s << "assignments\t" << r.total_assignments << '\n'
        << "duplicates\t" << r.duplicates << '\n'
        << "wrong_gold\t" << r.wrong_gold << '\n'
        << "discard_rate\t" << format_fixed(r.discard_rate(), 4) << '\n'
        << "kept_senses\t" << result.entries.size() << '\n'
        << "dropped_senses\t" << r.dropped.size() << '\n'
        << "mean_valid_per_kept\t" << format_fixed(r.mean_valid_per_kept, 2) << '\n';
      for (const auto& d : r.discarded) {
        s << "discarded\t" << d.index << '\t' << d.assignment.worker_id << '\t' << d.assignment.sense.term << '\t'
          << d.assignment.sense.category_id << '\t' << status_name(d.reason) << '\n';
      }
      for (const auto& d : r.dropped) {
        s << "dropped\t" << d.sense.term << '\t' << d.sense.category_id << '\t' << d.valid_annotations << '\n';
      }
    });
  }
  err << "aggregate: " << result.entries.size() << " entries, " << r.wrong_gold << " wrong-Q1 and "
      << r.duplicates << " duplicate assignments discarded, " << r.dropped.size() << " senses dropped\n";
}

void cmd_stats(const Options& o, const std::string& config, std::ostream& out, std::ostream&) {
  const auto lexicon = read_lexicon_jsonl(o.lexicon);
  const auto overall = colour_distribution(lexicon, DistributionMode::overall);
  const auto voted = colour_distribution(lexicon, DistributionMode::voted);
  const auto hist = agreement_histogram(lexicon);
  emit(o.out, out, config, [&](std::ostream& s) {
    s << "entries\t" << lexicon.size() << '\n';
    s << "colours";
    for (auto c : colour_order()) s << '\t' << colour_name(c);
    s << "\noverall" << tsv_row(overall, 1) << "\nvoted" << tsv_row(voted, 1) << '\n';
    s << "majority_class_size";
    for (const auto& [size, pct] : hist.share) s << '\t' << size;
    s << "\tge2\tge3\nagreement";
    for (const auto& [size, pct] : hist.share) s << '\t' << format_fixed(pct, 1);
    s << '\t' << format_fixed(hist.cumulative_ge2, 1) << '\t' << format_fixed(hist.cumulative_ge3, 1) << '\n';
    s << "chance_distinct(5,11)=" << format_fixed(chance_distinct_probability(5, 11), 3) << '\n';
  });
}

void cmd_categories(const Options& o, const std::string& config, std::ostream& out, std::ostream&) {
  const auto thesaurus = read_thesaurus(o.thesaurus);
  const auto lexicon = read_lexicon_jsonl(o.lexicon);
  const LexiconIndex index(lexicon);
  const auto scores = score_categories(thesaurus, index, o.min_members);
  const auto gold = extract_gold_standard(thesaurus, index, o.gold_threshold, o.min_members);

  emit(o.out, out, config, [&](std::ostream& s) { write_gold_standard(s, gold); });
  if (!o.scores.empty()) emit(o.scores, out, config, [&](std::ostream& s) { write_category_scores(s, scores, thesaurus); });

  std::vector<ScatterPoint> points;
  if (!o.imageability.empty()) {
    points = imageability_scatter(thesaurus, read_imageability(o.imageability), index, o.min_members);
    if (!o.scatter.empty()) emit(o.scatter, out, config, [&](std::ostream& s) { write_scatter(s, points); });
  }

  std::size_t at_floor = 0, above_floor = 0;
  for (const auto& sc : scores) {
    if (sc.best_count * 4 == sc.n_annotated) ++at_floor;
    if (sc.best_count * 4 > sc.n_annotated) ++above_floor;
  }
  auto correlation = [&](auto fn) -> std::string {
    std::vector<double> xs, ys;
    for (const auto& p : points) {
      xs.push_back(p.imageability);
      ys.push_back(p.strength);
    }
    try {
      return format_fixed(fn(xs, ys), 3);
    } catch (const Error&) {
      return "NA";
    }
  };
  // The summary goes to --summary, or to stdout when --out names a file.
  const bool to_stdout = o.summary.empty() && !o.out.empty();
  if (!o.summary.empty() || to_stdout) {
    emit(o.summary, out, config, [&](std::ostream& s) {
      s << "categories\t" << thesaurus.size() << '\n'
        << "eligible\t" << scores.size() << '\n'
        << "strength_eq_0.25\t" << at_floor << '\n'
        << "strength_gt_0.25\t" << above_floor << '\n'
        << "gold\t" << gold.entries.size() << '\n'
        << "gold_share\t"
        << (scores.empty() ? "NA" : format_fixed(100.0 * gold.entries.size() / scores.size(), 1)) << '\n';
      if (!o.imageability.empty()) {
        s << "imageability_points\t" << points.size() << '\n'
          << "pearson\t" << correlation([](auto& x, auto& y) { return pearson_correlation(x, y); }) << '\n'
          << "spearman\t" << correlation([](auto& x, auto& y) { return spearman_correlation(x, y); }) << '\n';
      }
    });
  }
}

void cmd_signature(const Options& o, const std::string& config, std::ostream& out, std::ostream&) {
  std::optional<std::set<std::string>> inventory;
  if (o.inventory == "emotions") inventory = emotion_labels();
  else if (o.inventory == "polarity") inventory = polarity_labels();
  else if (o.inventory != "auto") throw Error(ErrorKind::InvalidArgument, "unknown inventory " + o.inventory);
  const auto labels = read_label_lexicon(o.labels, inventory);
  const auto lexicon = read_lexicon_jsonl(o.lexicon);
  const auto matrix = association_signature(labels, lexicon);
  emit(o.out, out, config, [&](std::ostream& s) {
    write_signature(s, matrix);
    if (o.top > 0) {
      for (const auto& [label, row] : matrix.rows) {
        s << "#top\t" << label;
        for (const auto& [c, pct] : top_colours(matrix, label, static_cast<std::size_t>(o.top))) {
          s << '\t' << colour_name(c) << ':' << format_fixed(pct, 1);
        }
        s << '\n';
      }
    }
  });
}

void cmd_rank(const Options& o, const std::string& config, std::ostream& out, std::ostream& err) {
  ColourFrequencyCounter counter;
  for (const auto& path : expand_inputs(o.inputs)) {
    NgramReader reader(path, 1, o.min_count);
    NgramRecord r;
    while (reader.next(r)) counter.add(r);
    err << "rank: " << path << ": " << reader.stats().records << " records, " << reader.stats().malformed
        << " malformed\n";
  }
  const auto total = o.total_tokens > 0 ? o.total_tokens : counter.tokens_seen();
  if (total <= 0) throw Error(ErrorKind::EmptyInput, "no unigram tokens read and no --total-tokens given");
  const auto ranking = counter.ranking(total);
  emit(o.out, out, config, [&](std::ostream& s) { write_ranking(s, ranking, counter.counts()); });
}

void cmd_cooc(const Options& o, const std::string& config, std::ostream& out, std::ostream& err) {
  std::vector<std::string> targets;
  if (!o.targets.empty()) targets = read_terms(o.targets);
  if (!o.thesaurus.empty()) {
    for (const auto& c : read_thesaurus(o.thesaurus)) targets.insert(targets.end(), c.members.begin(), c.members.end());
  }
  if (targets.empty()) throw Error(ErrorKind::InvalidArgument, "cooc needs --targets or --thesaurus");
  if (o.mode != "text" && o.mode != "5gram") throw Error(ErrorKind::InvalidArgument, "unknown mode " + o.mode);
  const bool text = o.mode == "text";

  const auto files = expand_inputs(o.inputs);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(o.parallel, files.size()));
  std::vector<CoocTable> partial(workers);
  std::vector<std::string> logs(workers);
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          CoocCounter counter(targets, o.window);
          for (std::size_t i = w; i < files.size(); i += workers) {
            if (text) {
              std::ifstream in(files[i]);
              if (!in) throw Error(ErrorKind::IoError, "cannot open " + files[i]);
              std::string line;
              while (std::getline(in, line)) {
                for (const auto& tok : tokenize_text(line)) counter.feed_text_token(tok);
              }
              counter.end_text();
            } else {
              NgramReader reader(files[i], 5, o.min_count);
              NgramRecord r;
              while (reader.next(r)) counter.add_record(r);
              logs[w] += "cooc: " + files[i] + ": " + std::to_string(reader.stats().records) + " records, " +
                         std::to_string(reader.stats().malformed) + " malformed, " +
                         std::to_string(reader.stats().below_min_count) + " below min-count\n";
            }
          }
          partial[w] = counter.table();
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  CoocTable table;
  for (std::size_t w = 0; w < workers; ++w) {
    table.merge(partial[w]);
    err << logs[w];
  }
  emit(o.out, out, config, [&](std::ostream& s) { write_cooc_table(s, table); });
}

void cmd_predict(const Options& o, const std::string& config, std::ostream& out, std::ostream& err) {
  const auto thesaurus = read_thesaurus(o.thesaurus);
  std::optional<GoldStandard> gold;
  if (!o.gold.empty()) gold = read_gold_standard(o.gold);

  std::vector<const ThesaurusCategory*> targets;
  for (const auto& c : thesaurus) {
    if (!gold || gold->entries.contains(c.id)) targets.push_back(&c);
  }

  BaselineInputs aux;
  if (o.has_seed) aux.seed = o.seed;
  if (!o.ranking.empty()) aux.ranking = read_ranking(o.ranking);
  if (gold) aux.gold = &*gold;

  std::function<Prediction(const ThesaurusCategory&)> predict;
  std::optional<CoocTable> table;
  std::optional<LabelLexicon> polarity;
  std::unique_ptr<wordnet::Database> db;
  std::unique_ptr<wordnet::InformationContent> ic;
  std::unique_ptr<wordnet::ClosenessEngine> engine;

  const std::string& method = o.method;
  if (method == "cooc" || method == "cooc-polarity") {
    if (o.cooc.empty()) throw Error(ErrorKind::MissingAuxiliary, method + " needs --cooc");
    table = read_cooc_table(o.cooc);
    if (method == "cooc") {
      predict = [&](const ThesaurusCategory& c) { return predict_by_cooccurrence(c, *table); };
    } else {
      if (o.polarity.empty()) throw Error(ErrorKind::MissingAuxiliary, "cooc-polarity needs --polarity");
      polarity = read_label_lexicon(o.polarity, polarity_labels());
      predict = [&](const ThesaurusCategory& c) { return predict_by_cooccurrence_with_polarity(c, *table, *polarity); };
    }
  } else if (method == "wordnet" || method.starts_with("wordnet:")) {
    const std::string name = method == "wordnet" ? o.measure : method.substr(8);
    const auto measure = wordnet::parse_measure(name);
    if (!measure) throw Error(ErrorKind::InvalidArgument, "unknown measure '" + name + "'");
    if (o.wordnet_dir.empty()) throw Error(ErrorKind::MissingAuxiliary, "wordnet methods need --wordnet");
    db = std::make_unique<wordnet::Database>(wordnet::Database::load(o.wordnet_dir));
    if (*measure == wordnet::Measure::jcn || *measure == wordnet::Measure::lin) {
      if (o.ic.empty()) throw Error(ErrorKind::MissingAuxiliary, "jcn and lin need --ic");
    }
    if (!o.ic.empty()) {
      ic = std::make_unique<wordnet::InformationContent>(wordnet::InformationContent::load(o.ic, *db));
      for (const auto& w : ic->warnings()) err << "warning: " << w << '\n';
    }
    wordnet::ClosenessOptions copts;
    if (o.sense_aggregation == "sum") copts.aggregation = wordnet::SenseAggregation::sum;
    else if (o.sense_aggregation != "max") throw Error(ErrorKind::InvalidArgument, "--sense-aggregation is max or sum");
    engine = std::make_unique<wordnet::ClosenessEngine>(*db, ic.get(), copts);
    predict = [&, m = *measure](const ThesaurusCategory& c) { return engine->predict(c, m); };
  } else if (method.starts_with("baseline:")) {
    const auto kind = parse_baseline(method.substr(9));
    if (!kind) throw Error(ErrorKind::InvalidArgument, "unknown baseline '" + method.substr(9) + "'");
    predict = [&, k = *kind](const ThesaurusCategory& c) { return baseline_predict(k, c, aux); };
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown method '" + method + "'");
  }

  std::optional<BaselineKind> fallback;
  if (!o.fallback.empty()) {
    fallback = parse_baseline(o.fallback.starts_with("baseline:") ? o.fallback.substr(9) : o.fallback);
    if (!fallback) throw Error(ErrorKind::InvalidArgument, "unknown fallback '" + o.fallback + "'");
  }

  // One tag for the whole run so evaluate scores it as a single method.
  const std::string tag = fallback ? method + "+fallback:" + std::string(baseline_name(*fallback)) : method;
  std::vector<Prediction> predictions;
  std::size_t abstained = 0;
  for (const auto* c : targets) {
    auto p = predict(*c);
    p.method = tag;
    if (!p.colour) {
      ++abstained;
      if (fallback) {
        const auto fb = baseline_predict(*fallback, *c, aux);
        p.colour = fb.colour;
        p.score = fb.score;
      }
    }
    predictions.push_back(std::move(p));
  }
  emit(o.out, out, config, [&](std::ostream& s) { write_predictions(s, predictions); });
  err << "predict: " << predictions.size() << " categories, " << abstained << " abstentions";
  if (engine) err << ", " << engine->missing_terms().size() << " terms missing from WordNet";
  err << '\n';
}

void cmd_evaluate(const Options& o, const std::string& config, std::ostream& out, std::ostream&) {
  const auto gold = read_gold_standard(o.gold);
  std::vector<std::string> order;
  std::map<std::string, std::vector<Prediction>> by_method;
  for (const auto& path : o.predictions) {
    for (auto& p : read_predictions(path)) {
      if (!by_method.contains(p.method)) order.push_back(p.method);
      by_method[p.method].push_back(std::move(p));
    }
  }
  if (order.empty()) throw Error(ErrorKind::EmptyInput, "no predictions");
  emit(o.out, out, config, [&](std::ostream& s) {
    s << "#method\taccuracy\tgold_categories\n";
    for (const auto& m : order) {
      s << m << '\t' << format_fixed(evaluate_accuracy(by_method[m], gold), 1) << '\t' << gold.entries.size() << '\n';
    }
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"colourlex: word-colour association lexicon toolkit", "colourlex"};
  app.require_subcommand(1);
  app.set_version_flag("--version", COLOURLEX_VERSION);
  Options o;

  auto seed_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--seed", o.seed, "random seed");
    if (required) opt->required();
  };

  auto* hitgen = app.add_subcommand("hitgen", "generate HIT questionnaires and their answer key");
  hitgen->add_option("--thesaurus", o.thesaurus, "thesaurus TSV")->required()->check(CLI::ExistingFile);
  hitgen->add_option("--pool", o.pool, "distractor terms, one per line (default: all thesaurus terms)")
      ->check(CLI::ExistingFile);
  seed_opt(hitgen, true);
  hitgen->add_option("--out", o.out, "HIT TSV output");
  hitgen->add_option("--answer-key", o.answer_key, "answer-key TSV output");

  auto* agg = app.add_subcommand("aggregate", "validate assignments and build the lexicon by majority vote");
  agg->add_option("--assignments", o.assignments, "assignments TSV")->required()->check(CLI::ExistingFile);
  agg->add_option("--answer-key", o.answer_key, "answer-key TSV")->required()->check(CLI::ExistingFile);
  agg->add_option("--min-valid", o.min_valid, "minimum valid annotations per sense")->capture_default_str();
  seed_opt(agg, true);
  agg->add_option("--out", o.out, "lexicon JSON-lines output");
  agg->add_option("--report", o.report, "aggregation report TSV");

  auto* stats = app.add_subcommand("stats", "colour distributions, agreement histogram, chance value");
  stats->add_option("--lexicon", o.lexicon, "lexicon JSON-lines")->required()->check(CLI::ExistingFile);
  stats->add_option("--out", o.out, "output TSV");

  auto* cats = app.add_subcommand("categories", "category strength, gold standard, imageability");
  cats->add_option("--thesaurus", o.thesaurus, "thesaurus TSV")->required()->check(CLI::ExistingFile);
  cats->add_option("--lexicon", o.lexicon, "lexicon JSON-lines")->required()->check(CLI::ExistingFile);
  cats->add_option("--gold-threshold", o.gold_threshold, "minimum strength for the gold standard")
      ->capture_default_str();
  cats->add_option("--min-members", o.min_members, "annotated members needed for eligibility")
      ->capture_default_str();
  cats->add_option("--imageability", o.imageability, "imageability ratings TSV")->check(CLI::ExistingFile);
  cats->add_option("--out", o.out, "gold-standard TSV output");
  cats->add_option("--scores", o.scores, "all eligible category scores TSV");
  cats->add_option("--scatter", o.scatter, "imageability/strength scatter TSV");
  cats->add_option("--summary", o.summary, "summary TSV (default: stdout)");

  auto* sig = app.add_subcommand("signature", "colour signatures of emotion/polarity labels");
  sig->add_option("--labels", o.labels, "label lexicon TSV")->required()->check(CLI::ExistingFile);
  sig->add_option("--lexicon", o.lexicon, "lexicon JSON-lines")->required()->check(CLI::ExistingFile);
  sig->add_option("--inventory", o.inventory, "auto | emotions | polarity")->capture_default_str();
  sig->add_option("--top", o.top, "also list the k strongest colours per label");
  sig->add_option("--out", o.out, "signature TSV output");

  auto* rank = app.add_subcommand("rank", "colour frequency ranking from unigram files");
  rank->add_option("--unigrams", o.inputs, "unigram files or directories")->required();
  rank->add_option("--total-tokens", o.total_tokens, "corpus size (default: sum of unigram counts)");
  rank->add_option("--min-count", o.min_count, "skip n-grams below this count")->capture_default_str();
  rank->add_option("--out", o.out, "ranking TSV output");

  auto* cooc = app.add_subcommand("cooc", "build a co-occurrence table");
  cooc->add_option("--mode", o.mode, "text | 5gram")->capture_default_str();
  cooc->add_option("--input", o.inputs, "corpus files or directories")->required();
  cooc->add_option("--targets", o.targets, "target terms, one per line")->check(CLI::ExistingFile);
  cooc->add_option("--thesaurus", o.thesaurus, "use all thesaurus terms as targets")->check(CLI::ExistingFile);
  cooc->add_option("--window", o.window, "co-occurrence window")->capture_default_str();
  cooc->add_option("--min-count", o.min_count, "skip n-grams below this count")->capture_default_str();
  cooc->add_option("--parallel", o.parallel, "worker threads (input files are sharded)")->capture_default_str();
  cooc->add_option("--out", o.out, "co-occurrence TSV output");

  auto* pred = app.add_subcommand("predict", "predict category colours");
  pred->add_option("--method", o.method, "cooc | cooc-polarity | wordnet:<measure> | baseline:<random|corpus|gold>")
      ->required();
  pred->add_option("--thesaurus", o.thesaurus, "thesaurus TSV")->required()->check(CLI::ExistingFile);
  pred->add_option("--gold", o.gold, "gold standard TSV (restricts categories)")->check(CLI::ExistingFile);
  pred->add_option("--cooc", o.cooc, "co-occurrence TSV")->check(CLI::ExistingFile);
  pred->add_option("--polarity", o.polarity, "polarity lexicon TSV")->check(CLI::ExistingFile);
  pred->add_option("--wordnet", o.wordnet_dir, "WordNet dict directory")->check(CLI::ExistingDirectory);
  pred->add_option("--ic", o.ic, "information-content file")->check(CLI::ExistingFile);
  pred->add_option("--measure", o.measure, "jcn | lin | lesk | vector (with --method wordnet)");
  pred->add_option("--sense-aggregation", o.sense_aggregation, "max | sum")->capture_default_str();
  pred->add_option("--ranking", o.ranking, "ranking TSV for baseline:corpus")->check(CLI::ExistingFile);
  auto* pred_seed = pred->add_option("--seed", o.seed, "seed for baseline:random");
  pred->add_option("--fallback", o.fallback, "baseline used when the method abstains");
  pred->add_option("--out", o.out, "predictions TSV output");

  auto* eval = app.add_subcommand("evaluate", "accuracy of predictions against a gold standard");
  eval->add_option("--gold", o.gold, "gold standard TSV")->required()->check(CLI::ExistingFile);
  eval->add_option("--predictions", o.predictions, "prediction TSV files")->required()->check(CLI::ExistingFile);
  eval->add_option("--out", o.out, "report TSV output");

  std::vector<std::string> argv_store{"colourlex"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << COLOURLEX_VERSION << '\n';
    return kOk;
  } catch (const CLI::ValidationError& e) {
    // only the path checks validate values
    err << "error\tIoError\t" << e.what() << '\n';
    return kInputError;
  } catch (const CLI::ParseError& e) {
    err << "error\tUsageError\t" << e.what() << '\n';
    return kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const auto config = run_config(sub);
  try {
    const auto& name = sub->get_name();
    if (name == "hitgen") cmd_hitgen(o, config, out, err);
    else if (name == "aggregate") cmd_aggregate(o, config, out, err);
    else if (name == "stats") cmd_stats(o, config, out, err);
    else if (name == "categories") cmd_categories(o, config, out, err);
    else if (name == "signature") cmd_signature(o, config, out, err);
    else if (name == "rank") cmd_rank(o, config, out, err);
    else if (name == "cooc") cmd_cooc(o, config, out, err);
    else if (name == "predict") {
      Options po = o;
      po.has_seed = pred_seed->count() > 0;
      cmd_predict(po, config, out, err);
    } else if (name == "evaluate") cmd_evaluate(o, config, out, err);
  } catch (const Error& e) {
    err << "error\t" << error_kind_name(e.kind()) << '\t' << e.what() << '\n';
    return e.kind() == ErrorKind::InvariantViolation ? kInternalError : kInputError;
  } catch (const std::exception& e) {
    err << "error\tInternal\t" << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace colourlex::cli
