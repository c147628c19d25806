// lexboot: semantic lexicon bootstrapping from parsed text.
//
//   lexboot freq    CORPUS... [-k N]
//   lexboot extract CORPUS... [--out DIR]
//   lexboot run     CORPUS... --seeds FILE --out DIR [--iterations N] [--cutoff R]
//   lexboot synth   [SPEC.json | --preset two-clique] --rng-seed N [--out DIR]
//
// Exit codes: 0 ok, 1 usage/config, 2 input parse error, 3 invariant violation.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "lexboot/errors.hpp"
#include "lexboot/io.hpp"
#include "lexboot/pipeline.hpp"
#include "lexboot/synth.hpp"

namespace fs = std::filesystem;
using namespace lexboot;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kInternal = 3 };

/// key=value lines; '#' comments and blank lines ignored.
std::map<std::string, std::string> read_config_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    auto key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

bool given_on_command_line(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  for (const auto& a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

/// Appends config-file values for flags the chosen subcommand accepts and
/// the command line did not set.
void merge_config(CLI::App& app, std::vector<std::string>& args) {
  std::optional<fs::path> config;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) config = args[i].substr(9);
  }
  if (!config) return;
  CLI::App* sub = nullptr;
  for (const auto& a : args) {
    for (auto* s : app.get_subcommands({})) {
      if (s->get_name() == a) sub = s;
    }
    if (sub) break;
  }
  if (!sub) return;
  for (const auto& [key, value] : read_config_file(*config)) {
    if (given_on_command_line(args, key)) continue;
    if (sub->get_option_no_throw("--" + key) == nullptr) {
      throw ConfigError("config key '" + key + "' is not an option of '" + sub->get_name() + "'");
    }
    args.push_back("--" + key);
    args.push_back(value);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bootstrap semantic lexicons from parsed text"};
  app.require_subcommand(1);

  std::string config_path;
  int threads = 0;
  app.add_option("--config", config_path, "key=value file supplying any flag; command-line flags win");
  app.add_option("--threads", threads, "OpenMP worker count (0 = runtime default)")->check(CLI::NonNegativeNumber);

  std::vector<fs::path> corpus;
  std::string exceptions;
  std::string multiplicity = "sentence";
  auto add_corpus_options = [&](CLI::App* sub) {
    sub->add_option("corpus", corpus, "bracketed treebank files")->required()->check(CLI::ExistingFile);
    sub->add_option("--exceptions", exceptions, "plural<TAB>singular override file")->check(CLI::ExistingFile);
    sub->add_option("--pair-multiplicity", multiplicity, "count pairs once per sentence or per construction")
        ->check(CLI::IsMember({"sentence", "construction"}));
  };

  std::size_t top_k = 200;
  auto* freq = app.add_subcommand("freq", "list the most frequent head nouns");
  add_corpus_options(freq);
  freq->add_option("-k,--top", top_k, "number of lemmas to list")->check(CLI::PositiveNumber);

  fs::path out_dir;
  auto* extract = app.add_subcommand("extract", "write the co-occurrence counts file");
  add_corpus_options(extract);
  extract->add_option("--out", out_dir, "directory for counts.tsv (stdout if omitted)");

  RunConfig rc;
  std::string seeds_path;
  auto* run = app.add_subcommand("run", "bootstrap a lexicon and write the head and compound lists");
  add_corpus_options(run);
  run->add_option("--seeds", seeds_path, "seed word file")->required();
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_option("--iterations", rc.iterations, "rounds per phase")->check(CLI::PositiveNumber);
  run->add_option("--cutoff", rc.cutoff, "compound modifier cutoff in [0,1]")->check(CLI::Range(0.0, 1.0));
  run->add_option("--min-occurrence", rc.min_occurrence, "minimum head frequency for selection candidates")
      ->check(CLI::PositiveNumber);

  std::string synth_spec;
  std::string preset;
  std::uint64_t rng_seed = 1;
  auto* synth = app.add_subcommand("synth", "generate a synthetic treebank");
  synth->add_option("spec", synth_spec, "generator spec (JSON)")->check(CLI::ExistingFile);
  synth->add_option("--preset", preset, "built-in spec")->check(CLI::IsMember({"two-clique"}));
  synth->add_option("--rng-seed", rng_seed, "generator seed");
  synth->add_option("--out", out_dir, "directory for corpus.mrg (stdout if omitted)");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    merge_config(app, args);
    // CLI11 takes the vector form in reverse order.
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "lexboot: " << e.what() << '\n';
    return kUsage;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    std::optional<fs::path> exceptions_path;
    if (!exceptions.empty()) exceptions_path = exceptions;
    const auto mult = parse_multiplicity(multiplicity);

    if (*freq) {
      auto counts = load_corpus(corpus, make_extractor(exceptions_path), mult);
      std::cout << freq_listing(counts, top_k);
    } else if (*extract) {
      auto counts = load_corpus(corpus, make_extractor(exceptions_path), mult);
      auto text = counts_listing(counts);
      if (out_dir.empty()) {
        std::cout << text;
      } else {
        fs::create_directories(out_dir);
        write_file_atomic(out_dir / "counts.tsv", text);
      }
    } else if (*run) {
      rc.corpus = corpus;
      rc.seeds = seeds_path;
      rc.out_dir = out_dir;
      rc.exceptions = exceptions_path;
      rc.multiplicity = mult;
      auto result = run_pipeline(rc);
      for (const auto& m : result.bootstrap.seeds_missing) std::cerr << "lexboot: warning: seed '" << m << "' not in corpus\n";
    } else if (*synth) {
      if (synth_spec.empty() == preset.empty()) throw ConfigError("synth needs exactly one of SPEC or --preset");
      auto spec = preset.empty() ? SynthSpec::from_json(read_file(synth_spec)) : SynthSpec::two_clique();
      auto text = generate_treebank(spec, rng_seed);
      if (out_dir.empty()) {
        std::cout << text;
      } else {
        fs::create_directories(out_dir);
        write_file_atomic(out_dir / "corpus.mrg", text);
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "lexboot: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "lexboot: " << e.what() << '\n';
    return kInput;
  } catch (const InvariantError& e) {
    std::cerr << "lexboot: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "lexboot: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
