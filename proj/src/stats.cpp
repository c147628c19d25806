#include "lexboot/stats.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "lexboot/errors.hpp"

namespace lexboot {

namespace {

__extension__ using Wide = __int128;

// (1+u) ln(1+u) - u, accurate near u = 0 where the direct form cancels.
double relative_entropy_term(double u) {
  if (u == -1.0) return 1.0;
  if (std::abs(u) < 0.1) {
    double sum = 0.0;
    double power = u;
    for (int n = 2; n < 40; ++n) {
      power *= -u;
      double term = -power / (static_cast<double>(n) * (n - 1));
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return (1.0 + u) * std::log1p(u) - u;
}

Count checked_sub(Count a, Count b, const char* what) {
  if (b > a) throw InvariantError(std::string("negative contingency cell ") + what);
  return a - b;
}

}  // namespace

double selection_ratio(Count k_seed, Count k_any) {
  if (k_seed > k_any) throw std::logic_error("seed co-occurrences exceed total co-occurrences");
  if (k_any == 0) return 0.0;
  return static_cast<double>(k_seed) / static_cast<double>(k_any);
}

SeedMargins SeedMargins::of(const std::set<std::string>& seeds, const CoocTable& table) {
  SeedMargins m;
  for (const auto& s : seeds) {
    m.seed_any += table.any_count(s);
    for (const auto& [partner, n] : table.neighbors(s)) {
      if (seeds.count(partner)) m.seed_seed += n;
    }
  }
  return m;
}

Contingency build_contingency(Count seed_cooc, Count any_n, const SeedMargins& margins, Count grand_total) {
  Contingency c;
  c.k11 = seed_cooc;
  c.k12 = checked_sub(any_n, seed_cooc, "k12");
  c.k21 = checked_sub(checked_sub(margins.seed_any, seed_cooc, "k21"), margins.seed_seed, "k21");
  c.k22 = checked_sub(grand_total, c.k11 + c.k12 + c.k21, "k22");
  return c;
}

Contingency build_contingency(const std::string& n, const std::set<std::string>& seeds, const CoocTable& table) {
  if (seeds.count(n)) throw std::invalid_argument("'" + n + "' is a seed");
  Count seed_cooc = 0;
  for (const auto& [partner, k] : table.neighbors(n)) {
    if (seeds.count(partner)) seed_cooc += k;
  }
  return build_contingency(seed_cooc, table.any_count(n), SeedMargins::of(seeds, table), table.grand_total());
}

double log_likelihood_g2(const Contingency& c) {
  const Wide n = static_cast<Wide>(c.total());
  if (n == 0) throw std::domain_error("G2 of an all-zero table is undefined");

  const std::array<std::array<Count, 2>, 2> k{{{c.k11, c.k12}, {c.k21, c.k22}}};
  const std::array<Count, 2> row{c.k11 + c.k12, c.k21 + c.k22};
  const std::array<Count, 2> col{c.k11 + c.k21, c.k12 + c.k22};

  // Sum of E * phi(k/E - 1) with E = R*C/N. Each term is nonnegative, so
  // nearly independent tables do not lose precision to cancellation.
  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Wide rc = static_cast<Wide>(row[i]) * static_cast<Wide>(col[j]);
      if (rc == 0) continue;
      const Wide diff = static_cast<Wide>(k[i][j]) * n - rc;
      const double u = static_cast<double>(diff) / static_cast<double>(rc);
      const double expected = static_cast<double>(rc) / static_cast<double>(n);
      sum += expected * relative_entropy_term(u);
    }
  }
  return 2.0 * sum;
}

}  // namespace lexboot
