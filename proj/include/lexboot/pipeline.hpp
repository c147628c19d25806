#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lexboot/bootstrap.hpp"
#include "lexboot/compound.hpp"
#include "lexboot/extract.hpp"

namespace lexboot {

struct RunConfig {
  std::vector<std::filesystem::path> corpus;
  std::filesystem::path seeds;
  std::filesystem::path out_dir;
  std::optional<std::filesystem::path> exceptions;
  int iterations = 50;
  double cutoff = 0.25;
  Count min_occurrence = 1;
  PairMultiplicity multiplicity = PairMultiplicity::Sentence;

  /// Throws ConfigError for out-of-range values or missing paths.
  void validate() const;
};

PairMultiplicity parse_multiplicity(const std::string& s);

Extractor make_extractor(const std::optional<std::filesystem::path>& exceptions);

/// Parses and accumulates every corpus file in order.
CorpusCounts load_corpus(const std::vector<std::filesystem::path>& paths, const Extractor& extractor,
                         PairMultiplicity multiplicity);

/// Top-k head lemmas: "display<TAB>count", count descending, ties by key.
std::string freq_listing(const CorpusCounts& counts, std::size_t k);

std::string counts_listing(const CorpusCounts& counts);

struct RunOutputs {
  BootstrapResult bootstrap;
  std::vector<CompoundEntry> compounds;
  std::string head_list;
  std::string compound_list;
  std::string report;
};

/// Bootstrap, compound evaluation and rendering for already-counted input.
RunOutputs run_on_counts(const CorpusCounts& counts, const std::vector<Lemma>& seeds, const RunConfig& config);

/// Full run. Writes heads.tsv, compounds.tsv and report.txt into out_dir
/// only after every stage succeeded.
RunOutputs run_pipeline(const RunConfig& config);

}  // namespace lexboot
