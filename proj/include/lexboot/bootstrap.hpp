#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexboot/extract.hpp"

namespace lexboot {

struct BootstrapConfig {
  /// Rounds per phase; the second phase reuses the same count.
  int iterations = 50;
  /// Phase-1 candidates need at least this many head occurrences.
  Count min_occurrence = 1;
};

struct RankedEntry {
  std::string lemma;
  int iteration = 0;
  double score = 0.0;

  bool operator==(const RankedEntry&) const = default;
};

/// One round's tie group.
struct Addition {
  int iteration = 0;
  std::vector<std::string> group;
  double score = 0.0;
};

struct PhaseTrace {
  std::vector<std::string> initial_seeds;
  std::size_t candidate_pool = 0;
  std::vector<Addition> additions;
  /// Round in which no positive score remained (selection phase only).
  std::optional<int> early_stop;
  /// Rounds evaluated, including an early-stop round.
  int rounds = 0;
};

struct SelectResult {
  std::set<std::string> selected;
  PhaseTrace trace;
};

struct RankResult {
  std::vector<RankedEntry> ranked;
  PhaseTrace trace;
};

struct BootstrapResult {
  std::vector<RankedEntry> ranked;
  std::set<std::string> seeds_used;
  std::vector<std::string> seeds_missing;
  std::set<std::string> survivors;
  PhaseTrace select;
  PhaseTrace rank;
};

/// Dense, id-indexed copy of a CoocTable for the scoring loops. Ids follow
/// lexicographic lemma order.
class IndexedTable {
 public:
  using Id = std::uint32_t;
  struct Edge {
    Id to;
    Count count;
  };

  explicit IndexedTable(const CoocTable& table);

  std::size_t size() const { return lemmas_.size(); }
  const std::string& lemma(Id id) const { return lemmas_[id]; }
  std::optional<Id> find(const std::string& lemma) const;
  Count any(Id id) const { return any_[id]; }
  Count freq(Id id) const { return freq_[id]; }
  const std::vector<Edge>& edges(Id id) const { return adjacency_[id]; }
  Count grand_total() const { return grand_total_; }

 private:
  std::vector<std::string> lemmas_;
  std::vector<Count> any_;
  std::vector<Count> freq_;
  std::vector<std::vector<Edge>> adjacency_;
  Count grand_total_ = 0;
};

/// Splits requested seeds into those present in the table and those not.
/// Throws ConfigError if none are present.
std::set<std::string> usable_seeds(const CoocTable& table, const std::set<std::string>& seeds,
                                   std::vector<std::string>* missing = nullptr);

/// Ratio-driven growth. Returns every lemma added (originals excluded).
SelectResult phase_select(const IndexedTable& table, const std::set<std::string>& seeds, const BootstrapConfig& config);

/// G^2-driven ranking of `survivors` against the original seeds.
RankResult phase_rank(const IndexedTable& table, const std::set<std::string>& original_seeds,
                      const std::set<std::string>& survivors, int iterations);

/// Full two-phase run. Candidate scoring inside each round uses OpenMP;
/// the output is identical for every thread count.
BootstrapResult bootstrap(const CoocTable& table, const std::set<std::string>& seeds, const BootstrapConfig& config = {});

/// Straightforward serial versions that recompute every score from the
/// map-based table each round. Used to check the indexed kernels.
namespace reference {
SelectResult phase_select(const CoocTable& table, const std::set<std::string>& seeds, const BootstrapConfig& config);
RankResult phase_rank(const CoocTable& table, const std::set<std::string>& original_seeds,
                      const std::set<std::string>& survivors, int iterations);
BootstrapResult bootstrap(const CoocTable& table, const std::set<std::string>& seeds, const BootstrapConfig& config = {});
}  // namespace reference

}  // namespace lexboot
