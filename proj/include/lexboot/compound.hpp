#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lexboot/bootstrap.hpp"
#include "lexboot/extract.hpp"

namespace lexboot {

/// A head lemma and its position on the head list. Original seeds are
/// listed with rank 0 ahead of the ranked entries.
struct RankedHead {
  std::string lemma;
  std::size_t rank = 0;
};

/// Seeds (rank 0, lexicographic) followed by the bootstrap output (rank 1..).
std::vector<RankedHead> compound_heads(const std::set<std::string>& seeds, std::span<const RankedEntry> ranked);

struct CompoundEntry {
  std::vector<std::string> kept_tokens;
  std::string head;
  std::size_t head_rank = 0;
  /// Positions of kept_tokens within `source`, head last.
  std::vector<std::size_t> kept_positions;
  /// First corpus occurrence, for display.
  CompoundOccurrence source;
};

/// Position to the right of `position` with the largest right_count from the
/// token at `position`; the rightmost wins ties. Throws std::logic_error if
/// `position` is not a modifier position.
std::size_t attach_head(const CompoundOccurrence& compound, std::size_t position, const CompoundTable& table);

/// right_count(token, its attachment) / member_count(token); 0 when the
/// token never occurred in a compound.
double attachment_ratio(const CompoundOccurrence& compound, std::size_t position, const CompoundTable& table);

/// Positions kept after the cutoff and the omission cascade, head included.
/// nullopt when every modifier is omitted.
std::optional<std::vector<std::size_t>> evaluate_compound(const CompoundOccurrence& compound, const CompoundTable& table,
                                                          double cutoff);

/// Second output list: compounds of listed heads, grouped by head rank, in
/// first-occurrence order within a head, duplicates suppressed.
std::vector<CompoundEntry> emit_compound_list(std::span<const RankedHead> heads,
                                              std::span<const CompoundOccurrence> compounds,
                                              const CompoundTable& table, double cutoff);

/// Modifiers as written (lowercased unless proper nouns), head in display
/// form: "fighter plane(s)".
std::string display_compound(const CompoundEntry& entry, const std::map<std::string, Lemma>& vocabulary);

}  // namespace lexboot
