#pragma once

#include <set>
#include <string>

#include "lexboot/extract.hpp"

namespace lexboot {

/// 2x2 table over ordered co-occurrence events. Row 1: events whose first
/// member is the noun under test. Column 1: events whose partner is a seed.
struct Contingency {
  Count k11 = 0;
  Count k12 = 0;
  Count k21 = 0;
  Count k22 = 0;

  Count total() const { return k11 + k12 + k21 + k22; }
  bool operator==(const Contingency&) const = default;
};

/// k_seed / k_any, or 0 when k_any is 0. Throws std::logic_error when
/// k_seed > k_any.
double selection_ratio(Count k_seed, Count k_any);

/// Seed-side aggregates that build_contingency needs. Kept separately so
/// the bootstrap loop can maintain them incrementally.
struct SeedMargins {
  /// Sum of any_count over the seed set.
  Count seed_any = 0;
  /// Ordered seed-seed events: sum of pair_count(s, s') over s, s' in seeds.
  Count seed_seed = 0;

  static SeedMargins of(const std::set<std::string>& seeds, const CoocTable& table);
};

/// `seed_cooc` is the sum of pair_count(n, s) over the seeds.
/// Throws InvariantError if any cell would be negative.
Contingency build_contingency(Count seed_cooc, Count any_n, const SeedMargins& margins, Count grand_total);

/// Convenience overload that computes every input from the table. Throws
/// std::invalid_argument if `n` is itself a seed.
Contingency build_contingency(const std::string& n, const std::set<std::string>& seeds, const CoocTable& table);

/// Log-likelihood ratio G^2 = 2 * sum k_ij ln(k_ij N / (R_i C_j)), zero cells adding 0.
/// Throws std::domain_error when every cell is zero.
double log_likelihood_g2(const Contingency& c);

}  // namespace lexboot
