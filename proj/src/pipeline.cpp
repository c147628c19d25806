#include "lexboot/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "lexboot/errors.hpp"
#include "lexboot/io.hpp"
#include "lexboot/treebank.hpp"

namespace lexboot {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out.empty() ? "(none)" : out;
}

void describe_phase(std::ostream& out, const char* name, const PhaseTrace& t, int iterations) {
  std::size_t added = 0;
  for (const auto& a : t.additions) added += a.group.size();
  out << name << ":\n";
  out << "  initial seeds: " << join(t.initial_seeds) << '\n';
  out << "  candidate pool: " << t.candidate_pool << '\n';
  out << "  rounds executed: " << t.rounds << " of " << iterations << '\n';
  out << "  early stop: " << (t.early_stop ? "round " + std::to_string(*t.early_stop) : std::string("none")) << '\n';
  out << "  lemmas added: " << added << " in " << t.additions.size() << " tie groups\n";
}

}  // namespace

void RunConfig::validate() const {
  if (corpus.empty()) throw ConfigError("no corpus files given");
  if (seeds.empty()) throw ConfigError("no seed file given (--seeds)");
  if (out_dir.empty()) throw ConfigError("no output directory given (--out)");
  if (iterations < 1) throw ConfigError("--iterations must be at least 1");
  if (!(cutoff >= 0.0 && cutoff <= 1.0)) throw ConfigError("--cutoff must be in [0, 1]");
  if (min_occurrence < 1) throw ConfigError("--min-occurrence must be at least 1");
}

PairMultiplicity parse_multiplicity(const std::string& s) {
  if (s == "sentence") return PairMultiplicity::Sentence;
  if (s == "construction") return PairMultiplicity::Construction;
  throw ConfigError("--pair-multiplicity must be 'sentence' or 'construction'");
}

Extractor make_extractor(const std::optional<std::filesystem::path>& exceptions) {
  return Extractor(exceptions ? Lemmatizer::from_exceptions_file(*exceptions) : Lemmatizer{});
}

CorpusCounts load_corpus(const std::vector<std::filesystem::path>& paths, const Extractor& extractor,
                         PairMultiplicity multiplicity) {
  CorpusCounts total;
  std::vector<Tree> trees;
  for (const auto& p : paths) {
    auto part = read_treebank(p);
    std::move(part.begin(), part.end(), std::back_inserter(trees));
  }
  total = accumulate_parallel(extractor, trees, multiplicity);
  total.cooc.check_invariants();
  total.compounds.check_invariants();
  return total;
}

std::string freq_listing(const CorpusCounts& counts, std::size_t k) {
  if (k < 1) throw ConfigError("k must be at least 1");
  std::vector<std::pair<std::string, Count>> rows(counts.cooc.freqs().begin(), counts.cooc.freqs().end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  if (rows.size() > k) rows.resize(k);
  std::ostringstream out;
  for (const auto& [lemma, n] : rows) {
    auto it = counts.vocabulary.find(lemma);
    out << (it == counts.vocabulary.end() ? lemma : display(it->second)) << '\t' << n << '\n';
  }
  return out.str();
}

std::string counts_listing(const CorpusCounts& counts) {
  std::ostringstream out;
  write_counts(out, counts.cooc, counts.compounds);
  return out.str();
}

RunOutputs run_on_counts(const CorpusCounts& counts, const std::vector<Lemma>& seeds, const RunConfig& config) {
  if (config.iterations < 1) throw ConfigError("--iterations must be at least 1");
  if (!(config.cutoff >= 0.0 && config.cutoff <= 1.0)) throw ConfigError("--cutoff must be in [0, 1]");
  if (seeds.empty()) throw ConfigError("seed file lists no seeds");

  std::set<std::string> seed_keys;
  for (const auto& s : seeds) seed_keys.insert(s.key);

  RunOutputs out;
  BootstrapConfig bc;
  bc.iterations = config.iterations;
  bc.min_occurrence = config.min_occurrence;
  out.bootstrap = bootstrap(counts.cooc, seed_keys, bc);

  auto heads = compound_heads(out.bootstrap.seeds_used, out.bootstrap.ranked);
  out.compounds = emit_compound_list(heads, counts.compound_list, counts.compounds, config.cutoff);

  std::ostringstream heads_tsv;
  write_head_list(heads_tsv, out.bootstrap.ranked, counts.vocabulary);
  out.head_list = heads_tsv.str();
  std::ostringstream compounds_tsv;
  write_compound_list(compounds_tsv, out.compounds, counts.vocabulary);
  out.compound_list = compounds_tsv.str();

  std::ostringstream report;
  const auto& b = out.bootstrap;
  report << "sentences: " << counts.sentences << '\n';
  report << "head lemmas: " << counts.cooc.freqs().size() << '\n';
  report << "seeds used: " << join({b.seeds_used.begin(), b.seeds_used.end()}) << '\n';
  report << "seeds missing from corpus: " << join(b.seeds_missing) << '\n';
  report << "iterations per phase: " << config.iterations << '\n';
  describe_phase(report, "selection phase", b.select, config.iterations);
  report << "  survivors: " << b.survivors.size() << '\n';
  describe_phase(report, "ranking phase", b.rank, config.iterations);
  report << "head list entries: " << b.ranked.size() << '\n';
  report << "compound cutoff: " << format_score(config.cutoff) << '\n';
  report << "distinct compounds: " << counts.compound_list.size() << '\n';
  report << "compound list entries: " << out.compounds.size() << '\n';
  out.report = report.str();
  return out;
}

RunOutputs run_pipeline(const RunConfig& config) {
  config.validate();
  const auto seeds = read_seed_file(config.seeds);
  const auto extractor = make_extractor(config.exceptions);
  const auto counts = load_corpus(config.corpus, extractor, config.multiplicity);
  auto out = run_on_counts(counts, seeds, config);

  std::filesystem::create_directories(config.out_dir);
  write_file_atomic(config.out_dir / "heads.tsv", out.head_list);
  write_file_atomic(config.out_dir / "compounds.tsv", out.compound_list);
  write_file_atomic(config.out_dir / "report.txt", out.report);
  return out;
}

}  // namespace lexboot
