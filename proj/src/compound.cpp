#include "lexboot/compound.hpp"

#include <set>
#include <stdexcept>

namespace lexboot {

std::vector<RankedHead> compound_heads(const std::set<std::string>& seeds, std::span<const RankedEntry> ranked) {
  std::vector<RankedHead> out;
  for (const auto& s : seeds) out.push_back({s, 0});
  for (std::size_t i = 0; i < ranked.size(); ++i) out.push_back({ranked[i].lemma, i + 1});
  return out;
}

std::size_t attach_head(const CompoundOccurrence& compound, std::size_t position, const CompoundTable& table) {
  const std::size_t head = compound.head_index();
  if (position >= head) throw std::logic_error("attach_head: position is not left of the compound head");
  const auto& word = compound.tokens[position].key;
  std::size_t best = head;
  Count best_count = 0;
  for (std::size_t j = position + 1; j <= head; ++j) {
    Count c = table.right_count(word, compound.tokens[j].key);
    if (c >= best_count) {
      best_count = c;
      best = j;
    }
  }
  return best;
}

double attachment_ratio(const CompoundOccurrence& compound, std::size_t position, const CompoundTable& table) {
  const auto& word = compound.tokens[position].key;
  const Count member = table.member_count(word);
  if (member == 0) return 0.0;
  const auto target = attach_head(compound, position, table);
  return static_cast<double>(table.right_count(word, compound.tokens[target].key)) / static_cast<double>(member);
}

std::optional<std::vector<std::size_t>> evaluate_compound(const CompoundOccurrence& compound, const CompoundTable& table,
                                                          double cutoff) {
  const std::size_t head = compound.head_index();
  std::vector<char> omitted(compound.tokens.size(), 0);
  std::vector<std::size_t> attached(compound.tokens.size(), head);
  for (std::size_t i = 0; i < head; ++i) {
    attached[i] = attach_head(compound, i, table);
    const bool unseen = table.member_count(compound.tokens[i].key) == 0;
    omitted[i] = unseen || attachment_ratio(compound, i, table) < cutoff;
  }
  // A modifier whose own head was dropped goes with it.
  for (std::size_t i = head; i-- > 0;) {
    if (omitted[attached[i]]) omitted[i] = 1;
  }

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i <= head; ++i) {
    if (!omitted[i]) kept.push_back(i);
  }
  if (kept.size() < 2) return std::nullopt;
  return kept;
}

std::vector<CompoundEntry> emit_compound_list(std::span<const RankedHead> heads,
                                              std::span<const CompoundOccurrence> compounds,
                                              const CompoundTable& table, double cutoff) {
  std::map<std::string, std::vector<const CompoundOccurrence*>> by_head;
  for (const auto& c : compounds) by_head[c.head().key].push_back(&c);

  std::vector<CompoundEntry> out;
  std::set<std::vector<std::string>> emitted;
  std::set<std::string> heads_done;
  for (const auto& h : heads) {
    if (!heads_done.insert(h.lemma).second) continue;
    auto it = by_head.find(h.lemma);
    if (it == by_head.end()) continue;
    for (const CompoundOccurrence* c : it->second) {
      auto kept = evaluate_compound(*c, table, cutoff);
      if (!kept) continue;
      CompoundEntry e;
      for (auto pos : *kept) e.kept_tokens.push_back(c->tokens[pos].key);
      if (!emitted.insert(e.kept_tokens).second) continue;
      e.head = h.lemma;
      e.head_rank = h.rank;
      e.kept_positions = std::move(*kept);
      e.source = *c;
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::string display_compound(const CompoundEntry& entry, const std::map<std::string, Lemma>& vocabulary) {
  std::string out;
  for (std::size_t i = 0; i + 1 < entry.kept_positions.size(); ++i) {
    const auto& tok = entry.source.tokens[entry.kept_positions[i]];
    out += is_proper_noun_tag(tok.tag) ? tok.surface : to_lower(tok.surface);
    out += ' ';
  }
  auto it = vocabulary.find(entry.head);
  out += it == vocabulary.end() ? entry.head : display(it->second);
  return out;
}

}  // namespace lexboot
