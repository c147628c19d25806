#include "lexboot/bootstrap.hpp"

#include <algorithm>
#include <limits>

#include "lexboot/errors.hpp"
#include "lexboot/stats.hpp"

namespace lexboot {

namespace {

using Id = IndexedTable::Id;

void check_iterations(int iterations) {
  if (iterations < 1) throw ConfigError("iterations must be at least 1");
}

/// Highest score among eligible ids and every id that attains it, in id
/// order. Returns an empty group when nothing is eligible.
std::pair<double, std::vector<Id>> best_group(const std::vector<double>& scores, const std::vector<char>& eligible) {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<Id> group;
  for (Id i = 0; i < scores.size(); ++i) {
    if (!eligible[i]) continue;
    if (scores[i] > best) {
      best = scores[i];
      group.clear();
    }
    if (scores[i] == best) group.push_back(i);
  }
  return {best, std::move(group)};
}

std::vector<Id> ids_of(const IndexedTable& table, const std::set<std::string>& lemmas) {
  std::vector<Id> out;
  for (const auto& l : lemmas) {
    if (auto id = table.find(l)) out.push_back(*id);
  }
  return out;
}

/// Seed-side state shared by both phases.
struct SeedSet {
  const IndexedTable& table;
  std::vector<char> is_seed;
  /// Per lemma: co-occurrences with the current seeds.
  std::vector<Count> seed_cooc;
  SeedMargins margins;

  explicit SeedSet(const IndexedTable& t) : table(t), is_seed(t.size(), 0), seed_cooc(t.size(), 0) {}

  void add(Id s) {
    if (is_seed[s]) return;
    is_seed[s] = 1;
    margins.seed_seed += 2 * seed_cooc[s];
    margins.seed_any += table.any(s);
    for (const auto& e : table.edges(s)) seed_cooc[e.to] += e.count;
  }
};

void sort_ranked(std::vector<RankedEntry>& ranked) {
  std::stable_sort(ranked.begin(), ranked.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.iteration != b.iteration) return a.iteration < b.iteration;
    if (a.score != b.score) return a.score > b.score;
    return a.lemma < b.lemma;
  });
}

}  // namespace

IndexedTable::IndexedTable(const CoocTable& table) {
  std::set<std::string> all;
  for (const auto& [l, n] : table.freqs()) all.insert(l);
  for (const auto& [l, n] : table.any_counts()) all.insert(l);
  lemmas_.assign(all.begin(), all.end());
  any_.resize(lemmas_.size());
  freq_.resize(lemmas_.size());
  adjacency_.resize(lemmas_.size());
  for (Id i = 0; i < lemmas_.size(); ++i) {
    any_[i] = table.any_count(lemmas_[i]);
    freq_[i] = table.freq(lemmas_[i]);
    for (const auto& [partner, n] : table.neighbors(lemmas_[i])) adjacency_[i].push_back({*find(partner), n});
  }
  grand_total_ = table.grand_total();
}

std::optional<IndexedTable::Id> IndexedTable::find(const std::string& lemma) const {
  auto it = std::lower_bound(lemmas_.begin(), lemmas_.end(), lemma);
  if (it == lemmas_.end() || *it != lemma) return std::nullopt;
  return static_cast<Id>(it - lemmas_.begin());
}

std::set<std::string> usable_seeds(const CoocTable& table, const std::set<std::string>& seeds,
                                   std::vector<std::string>* missing) {
  std::set<std::string> usable;
  for (const auto& s : seeds) {
    if (table.contains(s)) {
      usable.insert(s);
    } else if (missing) {
      missing->push_back(s);
    }
  }
  if (usable.empty()) throw ConfigError("none of the seed words occur in the corpus");
  return usable;
}

SelectResult phase_select(const IndexedTable& table, const std::set<std::string>& seeds, const BootstrapConfig& config) {
  check_iterations(config.iterations);
  SelectResult result;
  SeedSet current(table);
  for (Id s : ids_of(table, seeds)) {
    current.add(s);
    result.trace.initial_seeds.push_back(table.lemma(s));
  }
  if (result.trace.initial_seeds.empty()) throw ConfigError("none of the seed words occur in the corpus");

  const auto n = static_cast<std::ptrdiff_t>(table.size());
  std::vector<char> eligible(table.size(), 0);
  for (Id i = 0; i < table.size(); ++i) {
    eligible[i] = !current.is_seed[i] && table.freq(i) >= config.min_occurrence;
  }
  result.trace.candidate_pool = static_cast<std::size_t>(std::count(eligible.begin(), eligible.end(), 1));

  std::vector<double> scores(table.size(), 0.0);
  for (int round = 1; round <= config.iterations; ++round) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (eligible[i]) scores[i] = selection_ratio(current.seed_cooc[i], table.any(static_cast<Id>(i)));
    }
    auto [best, group] = best_group(scores, eligible);
    result.trace.rounds = round;
    if (group.empty() || best <= 0.0) {
      result.trace.early_stop = round;
      break;
    }
    Addition add{round, {}, best};
    for (Id id : group) {
      eligible[id] = 0;
      current.add(id);
      result.selected.insert(table.lemma(id));
      add.group.push_back(table.lemma(id));
    }
    result.trace.additions.push_back(std::move(add));
  }
  return result;
}

RankResult phase_rank(const IndexedTable& table, const std::set<std::string>& original_seeds,
                      const std::set<std::string>& survivors, int iterations) {
  check_iterations(iterations);
  RankResult result;
  SeedSet current(table);
  for (Id s : ids_of(table, original_seeds)) {
    current.add(s);
    result.trace.initial_seeds.push_back(table.lemma(s));
  }

  std::vector<char> eligible(table.size(), 0);
  for (Id id : ids_of(table, survivors)) {
    if (original_seeds.count(table.lemma(id))) throw std::invalid_argument("survivor '" + table.lemma(id) + "' is a seed");
    eligible[id] = 1;
  }
  result.trace.candidate_pool = static_cast<std::size_t>(std::count(eligible.begin(), eligible.end(), 1));

  const auto n = static_cast<std::ptrdiff_t>(table.size());
  const Count grand = table.grand_total();
  std::vector<double> scores(table.size(), 0.0);
  for (int round = 1; round <= iterations; ++round) {
    if (std::find(eligible.begin(), eligible.end(), 1) == eligible.end()) break;
    const SeedMargins margins = current.margins;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (!eligible[i]) continue;
      auto c = build_contingency(current.seed_cooc[i], table.any(static_cast<Id>(i)), margins, grand);
      scores[i] = c.total() == 0 ? 0.0 : log_likelihood_g2(c);
    }
    auto [best, group] = best_group(scores, eligible);
    result.trace.rounds = round;
    Addition add{round, {}, best};
    for (Id id : group) {
      eligible[id] = 0;
      current.add(id);
      result.ranked.push_back({table.lemma(id), round, best});
      add.group.push_back(table.lemma(id));
    }
    result.trace.additions.push_back(std::move(add));
  }
  sort_ranked(result.ranked);
  return result;
}

BootstrapResult bootstrap(const CoocTable& table, const std::set<std::string>& seeds, const BootstrapConfig& config) {
  check_iterations(config.iterations);
  BootstrapResult out;
  out.seeds_used = usable_seeds(table, seeds, &out.seeds_missing);
  const IndexedTable indexed(table);
  auto selected = phase_select(indexed, out.seeds_used, config);
  out.survivors = std::move(selected.selected);
  out.select = std::move(selected.trace);
  auto ranked = phase_rank(indexed, out.seeds_used, out.survivors, config.iterations);
  out.ranked = std::move(ranked.ranked);
  out.rank = std::move(ranked.trace);
  return out;
}

// ---- serial reference ------------------------------------------------------

namespace reference {

namespace {

Count cooc_with(const CoocTable& table, const std::string& n, const std::set<std::string>& seeds) {
  Count k = 0;
  for (const auto& s : seeds) k += table.pair_count(n, s);
  return k;
}

std::set<std::string> all_lemmas(const CoocTable& table) {
  std::set<std::string> out;
  for (const auto& [l, n] : table.freqs()) out.insert(l);
  for (const auto& [l, n] : table.any_counts()) out.insert(l);
  return out;
}

}  // namespace

SelectResult phase_select(const CoocTable& table, const std::set<std::string>& seeds, const BootstrapConfig& config) {
  check_iterations(config.iterations);
  SelectResult result;
  std::set<std::string> current;
  for (const auto& s : seeds) {
    if (table.contains(s)) current.insert(s);
  }
  if (current.empty()) throw ConfigError("none of the seed words occur in the corpus");
  result.trace.initial_seeds.assign(current.begin(), current.end());

  std::set<std::string> pool;
  for (const auto& l : all_lemmas(table)) {
    if (!current.count(l) && table.freq(l) >= config.min_occurrence) pool.insert(l);
  }
  result.trace.candidate_pool = pool.size();

  for (int round = 1; round <= config.iterations; ++round) {
    result.trace.rounds = round;
    double best = 0.0;
    std::vector<std::string> group;
    for (const auto& l : pool) {
      double r = selection_ratio(cooc_with(table, l, current), table.any_count(l));
      if (r > best) {
        best = r;
        group.clear();
      }
      if (r == best && r > 0.0) group.push_back(l);
    }
    if (group.empty()) {
      result.trace.early_stop = round;
      break;
    }
    for (const auto& l : group) {
      pool.erase(l);
      current.insert(l);
      result.selected.insert(l);
    }
    result.trace.additions.push_back({round, group, best});
  }
  return result;
}

RankResult phase_rank(const CoocTable& table, const std::set<std::string>& original_seeds,
                      const std::set<std::string>& survivors, int iterations) {
  check_iterations(iterations);
  RankResult result;
  std::set<std::string> current;
  for (const auto& s : original_seeds) {
    if (table.contains(s)) current.insert(s);
  }
  result.trace.initial_seeds.assign(current.begin(), current.end());
  std::set<std::string> pool;
  for (const auto& s : survivors) {
    if (table.contains(s)) pool.insert(s);
  }
  result.trace.candidate_pool = pool.size();

  for (int round = 1; round <= iterations && !pool.empty(); ++round) {
    result.trace.rounds = round;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::string> group;
    for (const auto& l : pool) {
      auto c = build_contingency(l, current, table);
      double g = c.total() == 0 ? 0.0 : log_likelihood_g2(c);
      if (g > best) {
        best = g;
        group.clear();
      }
      if (g == best) group.push_back(l);
    }
    for (const auto& l : group) {
      pool.erase(l);
      current.insert(l);
      result.ranked.push_back({l, round, best});
    }
    result.trace.additions.push_back({round, group, best});
  }
  sort_ranked(result.ranked);
  return result;
}

BootstrapResult bootstrap(const CoocTable& table, const std::set<std::string>& seeds, const BootstrapConfig& config) {
  check_iterations(config.iterations);
  BootstrapResult out;
  out.seeds_used = usable_seeds(table, seeds, &out.seeds_missing);
  auto selected = phase_select(table, out.seeds_used, config);
  out.survivors = std::move(selected.selected);
  out.select = std::move(selected.trace);
  auto ranked = phase_rank(table, out.seeds_used, out.survivors, config.iterations);
  out.ranked = std::move(ranked.ranked);
  out.rank = std::move(ranked.trace);
  return out;
}

}  // namespace reference

}  // namespace lexboot
