#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexboot/morph.hpp"
#include "lexboot/treebank.hpp"

namespace lexboot {

using Count = std::uint64_t;

/// Unordered lemma pair stored with first < second.
using LemmaPair = std::pair<std::string, std::string>;
LemmaPair make_pair_key(std::string a, std::string b);

struct HeadOccurrence {
  std::string lemma;
  std::size_t token_index = 0;
  /// NP whose leaf children contain the head.
  const Tree* np_node = nullptr;
};

struct CompoundToken {
  std::string key;
  std::string tag;
  std::string surface;

  bool operator==(const CompoundToken&) const = default;
};

/// Consecutive leaves of one NP: noun/JJ/CD tokens ending in a noun.
struct CompoundOccurrence {
  std::vector<CompoundToken> tokens;
  /// Token index of the first leaf in the sentence.
  std::size_t first_token = 0;

  std::size_t head_index() const { return tokens.size() - 1; }
  const CompoundToken& head() const { return tokens.back(); }
  std::vector<std::string> keys() const;
};

/// How often a co-occurring pair is counted inside one sentence.
enum class PairMultiplicity {
  Sentence,      // once per sentence
  Construction,  // once per connected list/appositive construction
};

/// Symmetric head-noun co-occurrence counts.
class CoocTable {
 public:
  void add_pair(const std::string& a, const std::string& b, Count n = 1);
  void add_head(const std::string& lemma, Count n = 1);
  void merge(const CoocTable& other);

  Count pair_count(const std::string& a, const std::string& b) const;
  Count any_count(const std::string& a) const;
  Count freq(const std::string& a) const;
  Count grand_total() const { return grand_total_; }

  /// Partners of `a` with their pair counts; empty map if none.
  const std::map<std::string, Count>& neighbors(const std::string& a) const;
  const std::map<std::string, std::map<std::string, Count>>& adjacency() const { return adjacency_; }
  const std::map<std::string, Count>& any_counts() const { return any_; }
  const std::map<std::string, Count>& freqs() const { return freq_; }
  /// Every unordered pair once, with its count, in lexicographic order.
  std::vector<std::pair<LemmaPair, Count>> pairs() const;

  /// True if the lemma occurred as a head or in any pair.
  bool contains(const std::string& lemma) const;

  /// Throws InvariantError if symmetry or the marginal sums are broken.
  void check_invariants() const;

  bool operator==(const CoocTable&) const = default;

 private:
  std::map<std::string, std::map<std::string, Count>> adjacency_;
  std::map<std::string, Count> any_;
  std::map<std::string, Count> freq_;
  Count grand_total_ = 0;
};

/// Per-noun compound participation counts.
class CompoundTable {
 public:
  /// Counts one compound occurrence.
  void add(std::span<const std::string> keys);
  void add_counts(const std::string& i, const std::string& j, Count right);
  void add_member(const std::string& i, Count n);
  void merge(const CompoundTable& other);

  /// Compounds containing `i` with `j` somewhere to its right.
  Count right_count(const std::string& i, const std::string& j) const;
  /// Compounds containing `i`.
  Count member_count(const std::string& i) const;

  const std::map<std::pair<std::string, std::string>, Count>& right_counts() const { return right_; }
  const std::map<std::string, Count>& member_counts() const { return member_; }

  void check_invariants() const;
  bool operator==(const CompoundTable&) const = default;

 private:
  std::map<std::pair<std::string, std::string>, Count> right_;
  std::map<std::string, Count> member_;
};

/// Compound and head identification plus the co-occurrence relation.
class Extractor {
 public:
  explicit Extractor(Lemmatizer lemmatizer = {}) : lemmatizer_(std::move(lemmatizer)) {}

  const Lemmatizer& lemmatizer() const { return lemmatizer_; }

  std::vector<CompoundOccurrence> find_compounds(const Tree& tree) const;
  /// One head per noun run, ordered by token index.
  std::vector<HeadOccurrence> head_occurrences(const Tree& tree) const;
  /// Transitive closure of the base relation, self-pairs removed.
  std::set<LemmaPair> extract_pairs(const Tree& tree) const;
  /// Pair events of one sentence under the given multiplicity policy.
  std::vector<LemmaPair> pair_events(const Tree& tree, PairMultiplicity multiplicity) const;
  /// Co-occurrence groups: each inner vector holds the token indices of
  /// heads that are transitively related. Singletons are included.
  std::vector<std::vector<std::size_t>> head_groups(const Tree& tree) const;

 private:
  Lemmatizer lemmatizer_;
};

/// Extraction output for a single tree.
struct SentenceCounts {
  std::vector<std::string> heads;
  std::vector<LemmaPair> pairs;
  std::vector<CompoundOccurrence> compounds;
  std::map<std::string, Lemma> vocabulary;
};

/// Everything the later stages need from a corpus.
struct CorpusCounts {
  CoocTable cooc;
  CompoundTable compounds;
  /// Distinct compounds by key sequence, in order of first occurrence.
  std::vector<CompoundOccurrence> compound_list;
  std::map<std::vector<std::string>, std::size_t> compound_index;
  std::map<std::string, Lemma> vocabulary;
  std::size_t sentences = 0;

  void merge_sentence(SentenceCounts&& s);
};

SentenceCounts extract_sentence(const Extractor& ex, const Tree& tree, PairMultiplicity multiplicity);

/// Serial reference accumulation.
CorpusCounts accumulate(const Extractor& ex, std::span<const Tree> trees,
                        PairMultiplicity multiplicity = PairMultiplicity::Sentence);

/// Sentences are extracted on the OpenMP pool and merged in input order;
/// the result equals accumulate() for any thread count.
CorpusCounts accumulate_parallel(const Extractor& ex, std::span<const Tree> trees,
                                 PairMultiplicity multiplicity = PairMultiplicity::Sentence);

}  // namespace lexboot
