#include "lexboot/extract.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "lexboot/errors.hpp"

namespace lexboot {

namespace {

const std::map<std::string, Count> kNoNeighbors;

template <typename Map, typename Key>
Count lookup(const Map& m, const Key& k) {
  auto it = m.find(k);
  return it == m.end() ? 0 : it->second;
}

/// Maximal noun/JJ/CD stretch of an NP's leaf children, cut after its last
/// noun.
struct Run {
  const Tree* np = nullptr;
  std::vector<const Tree*> leaves;
};

bool run_tag(std::string_view tag) { return is_noun_tag(tag) || is_modifier_tag(tag); }

void collect_runs(const Tree& node, std::vector<Run>& out) {
  if (node.is_leaf()) return;
  if (is_np(node.label)) {
    std::vector<const Tree*> current;
    auto flush = [&] {
      while (!current.empty() && !is_noun_tag(current.back()->token->tag)) current.pop_back();
      if (!current.empty()) out.push_back(Run{&node, std::move(current)});
      current.clear();
    };
    for (const auto& child : node.children) {
      if (child.is_leaf() && run_tag(child.token->tag)) {
        current.push_back(&child);
      } else {
        flush();
      }
    }
    flush();
  }
  for (const auto& child : node.children) collect_runs(child, out);
}

std::vector<Run> noun_runs(const Tree& tree) {
  std::vector<Run> runs;
  collect_runs(tree, runs);
  std::sort(runs.begin(), runs.end(),
            [](const Run& a, const Run& b) { return a.leaves.front()->span.first < b.leaves.front()->span.first; });
  return runs;
}

// Marks nodes that have an S-like or VP node strictly below them.
bool mark_clausal(const Tree& node, std::unordered_map<const Tree*, bool>& below) {
  bool found = false;
  for (const auto& child : node.children) {
    bool child_below = mark_clausal(child, below);
    found = found || child_below || (!child.is_leaf() && is_clausal_or_vp(child.label));
  }
  below[&node] = found;
  return found;
}

void collect_paths(const Tree& node, std::vector<const Tree*>& stack, std::vector<std::vector<const Tree*>>& paths) {
  stack.push_back(&node);
  if (node.is_leaf()) {
    paths.push_back(stack);
  } else {
    for (const auto& child : node.children) collect_paths(child, stack, paths);
  }
  stack.pop_back();
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

LemmaPair make_pair_key(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

std::vector<std::string> CompoundOccurrence::keys() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.key);
  return out;
}

// ---- CoocTable -------------------------------------------------------------

void CoocTable::add_pair(const std::string& a, const std::string& b, Count n) {
  if (a == b) throw InvariantError("self pair for '" + a + "'");
  if (n == 0) return;
  adjacency_[a][b] += n;
  adjacency_[b][a] += n;
  any_[a] += n;
  any_[b] += n;
  grand_total_ += 2 * n;
}

void CoocTable::add_head(const std::string& lemma, Count n) { freq_[lemma] += n; }

void CoocTable::merge(const CoocTable& other) {
  for (const auto& [a, row] : other.adjacency_) {
    auto& mine = adjacency_[a];
    for (const auto& [b, n] : row) mine[b] += n;
  }
  for (const auto& [a, n] : other.any_) any_[a] += n;
  for (const auto& [a, n] : other.freq_) freq_[a] += n;
  grand_total_ += other.grand_total_;
}

Count CoocTable::pair_count(const std::string& a, const std::string& b) const {
  auto it = adjacency_.find(a);
  return it == adjacency_.end() ? 0 : lookup(it->second, b);
}

Count CoocTable::any_count(const std::string& a) const { return lookup(any_, a); }
Count CoocTable::freq(const std::string& a) const { return lookup(freq_, a); }

const std::map<std::string, Count>& CoocTable::neighbors(const std::string& a) const {
  auto it = adjacency_.find(a);
  return it == adjacency_.end() ? kNoNeighbors : it->second;
}

std::vector<std::pair<LemmaPair, Count>> CoocTable::pairs() const {
  std::vector<std::pair<LemmaPair, Count>> out;
  for (const auto& [a, row] : adjacency_) {
    for (auto it = row.upper_bound(a); it != row.end(); ++it) out.push_back({{a, it->first}, it->second});
  }
  return out;
}

bool CoocTable::contains(const std::string& lemma) const { return freq_.count(lemma) || any_.count(lemma); }

void CoocTable::check_invariants() const {
  Count total = 0;
  for (const auto& [a, row] : adjacency_) {
    Count sum = 0;
    for (const auto& [b, n] : row) {
      if (a == b) throw InvariantError("self pair for '" + a + "'");
      if (pair_count(b, a) != n) throw InvariantError("asymmetric pair " + a + "/" + b);
      sum += n;
    }
    if (sum != any_count(a)) throw InvariantError("any_count mismatch for '" + a + "'");
    total += sum;
  }
  for (const auto& [a, n] : any_) {
    if (n != 0 && !adjacency_.count(a)) throw InvariantError("any_count without pairs for '" + a + "'");
  }
  if (total != grand_total_) throw InvariantError("grand total mismatch");
}

// ---- CompoundTable ---------------------------------------------------------

void CompoundTable::add(std::span<const std::string> keys) {
  std::set<std::string> members(keys.begin(), keys.end());
  for (const auto& m : members) ++member_[m];
  std::set<std::pair<std::string, std::string>> right;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i + 1; j < keys.size(); ++j) right.insert({keys[i], keys[j]});
  }
  for (const auto& p : right) ++right_[p];
}

void CompoundTable::add_counts(const std::string& i, const std::string& j, Count right) { right_[{i, j}] += right; }
void CompoundTable::add_member(const std::string& i, Count n) { member_[i] += n; }

void CompoundTable::merge(const CompoundTable& other) {
  for (const auto& [p, n] : other.right_) right_[p] += n;
  for (const auto& [k, n] : other.member_) member_[k] += n;
}

Count CompoundTable::right_count(const std::string& i, const std::string& j) const { return lookup(right_, std::pair{i, j}); }
Count CompoundTable::member_count(const std::string& i) const { return lookup(member_, i); }

void CompoundTable::check_invariants() const {
  for (const auto& [p, n] : right_) {
    if (n > member_count(p.first)) throw InvariantError("right count exceeds member count for '" + p.first + "'");
  }
}

// ---- Extractor -------------------------------------------------------------

std::vector<CompoundOccurrence> Extractor::find_compounds(const Tree& tree) const {
  std::vector<CompoundOccurrence> out;
  for (const auto& run : noun_runs(tree)) {
    if (run.leaves.size() < 2) continue;
    CompoundOccurrence c;
    c.first_token = run.leaves.front()->span.first;
    for (const Tree* leaf : run.leaves) {
      const auto& tok = *leaf->token;
      c.tokens.push_back({lemmatizer_.lemmatize(tok.surface, tok.tag), tok.tag, tok.surface});
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<HeadOccurrence> Extractor::head_occurrences(const Tree& tree) const {
  std::vector<HeadOccurrence> out;
  for (const auto& run : noun_runs(tree)) {
    const Tree* head = run.leaves.back();
    out.push_back({lemmatizer_.lemmatize(head->token->surface, head->token->tag), head->span.first, run.np});
  }
  return out;
}

std::vector<std::vector<std::size_t>> Extractor::head_groups(const Tree& tree) const {
  auto heads = head_occurrences(tree);
  std::vector<std::vector<std::size_t>> groups;
  if (heads.empty()) return groups;

  std::vector<std::vector<const Tree*>> paths;
  std::vector<const Tree*> stack;
  collect_paths(tree, stack, paths);
  std::unordered_map<const Tree*, bool> clausal_below;
  mark_clausal(tree, clausal_below);

  DisjointSets sets(heads.size());
  for (std::size_t h = 0; h + 1 < heads.size(); ++h) {
    const std::size_t left = heads[h].token_index;
    const std::size_t right = heads[h + 1].token_index;
    const auto& pa = paths[left];
    const auto& pb = paths[right];

    std::size_t common = 0;
    while (common + 1 < pa.size() && common + 1 < pb.size() && pa[common + 1] == pb[common + 1]) ++common;
    const Tree* np = nullptr;
    for (std::size_t k = common + 1; k-- > 0;) {
      if (is_np(pa[k]->label)) {
        np = pa[k];
        break;
      }
    }
    if (np == nullptr || clausal_below.at(np)) continue;

    bool separated = false;
    for (std::size_t i = left + 1; i < right && !separated; ++i) {
      const auto& tok = *paths[i].back()->token;
      separated = tok.surface == "," || tok.tag == "CC";
    }
    if (separated) sets.unite(h, h + 1);
  }

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t h = 0; h < heads.size(); ++h) by_root[sets.find(h)].push_back(heads[h].token_index);
  for (auto& [root, members] : by_root) groups.push_back(std::move(members));
  return groups;
}

std::vector<LemmaPair> Extractor::pair_events(const Tree& tree, PairMultiplicity multiplicity) const {
  auto heads = head_occurrences(tree);
  std::map<std::size_t, const std::string*> lemma_at;
  for (const auto& h : heads) lemma_at[h.token_index] = &h.lemma;

  std::vector<LemmaPair> out;
  std::set<LemmaPair> sentence_seen;
  for (const auto& group : head_groups(tree)) {
    std::set<LemmaPair> group_pairs;
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        const auto& a = *lemma_at.at(group[i]);
        const auto& b = *lemma_at.at(group[j]);
        if (a != b) group_pairs.insert(make_pair_key(a, b));
      }
    }
    for (auto& p : group_pairs) {
      if (multiplicity == PairMultiplicity::Construction || sentence_seen.insert(p).second) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<LemmaPair> Extractor::extract_pairs(const Tree& tree) const {
  auto events = pair_events(tree, PairMultiplicity::Sentence);
  return {events.begin(), events.end()};
}

// ---- accumulation ------------------------------------------------------------

SentenceCounts extract_sentence(const Extractor& ex, const Tree& tree, PairMultiplicity multiplicity) {
  SentenceCounts s;
  const auto& lm = ex.lemmatizer();
  for (const auto& run : noun_runs(tree)) {
    for (const Tree* leaf : run.leaves) {
      const auto& tok = *leaf->token;
      if (!is_noun_tag(tok.tag)) continue;
      auto a = lm.analyze(tok.surface, tok.tag);
      s.vocabulary[a.key].observe(a, tok.tag);
    }
    const auto& head = *run.leaves.back()->token;
    s.heads.push_back(lm.lemmatize(head.surface, head.tag));
  }
  s.pairs = ex.pair_events(tree, multiplicity);
  s.compounds = ex.find_compounds(tree);
  return s;
}

void CorpusCounts::merge_sentence(SentenceCounts&& s) {
  ++sentences;
  for (const auto& h : s.heads) cooc.add_head(h);
  for (const auto& [a, b] : s.pairs) cooc.add_pair(a, b);
  for (auto& c : s.compounds) {
    auto keys = c.keys();
    compounds.add(keys);
    if (compound_index.emplace(keys, compound_list.size()).second) compound_list.push_back(std::move(c));
  }
  for (const auto& [key, lemma] : s.vocabulary) vocabulary[key].merge(lemma);
}

CorpusCounts accumulate(const Extractor& ex, std::span<const Tree> trees, PairMultiplicity multiplicity) {
  CorpusCounts out;
  for (const auto& t : trees) out.merge_sentence(extract_sentence(ex, t, multiplicity));
  return out;
}

CorpusCounts accumulate_parallel(const Extractor& ex, std::span<const Tree> trees, PairMultiplicity multiplicity) {
  const auto n = static_cast<std::ptrdiff_t>(trees.size());
  std::vector<SentenceCounts> per_sentence(trees.size());

#pragma omp parallel for schedule(dynamic, 32)
  for (std::ptrdiff_t i = 0; i < n; ++i) per_sentence[i] = extract_sentence(ex, trees[i], multiplicity);

  CorpusCounts out;
  for (auto& s : per_sentence) out.merge_sentence(std::move(s));
  return out;
}

}  // namespace lexboot
