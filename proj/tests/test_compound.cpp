#include <random>
#include <set>

#include "doctest.h"
#include "lexboot/compound.hpp"

using namespace lexboot;

namespace {

CompoundOccurrence compound(std::initializer_list<const char*> keys) {
  CompoundOccurrence c;
  for (const char* k : keys) c.tokens.push_back({k, "NN", k});
  return c;
}

/// Sets right_count(i, j) and member_count(i) directly.
void set_ratio(CompoundTable& t, const char* i, const char* j, Count right, Count member) {
  t.add_counts(i, j, right);
  if (t.member_count(i) < member) t.add_member(i, member - t.member_count(i));
}

}  // namespace

TEST_CASE("attach_head") {
  auto c = compound({"nuclear-powered", "aircraft", "carrier"});
  CompoundTable t;
  set_ratio(t, "nuclear-powered", "carrier", 3, 4);
  set_ratio(t, "nuclear-powered", "aircraft", 1, 4);
  CHECK(attach_head(c, 0, t) == 2);

  CompoundTable tie;
  set_ratio(tie, "nuclear-powered", "carrier", 2, 4);
  set_ratio(tie, "nuclear-powered", "aircraft", 2, 4);
  CHECK(attach_head(c, 0, tie) == 2);
  // No evidence at all: the rightmost candidate.
  CHECK(attach_head(c, 0, CompoundTable{}) == 2);

  CompoundTable left;
  set_ratio(left, "nuclear-powered", "aircraft", 3, 4);
  set_ratio(left, "nuclear-powered", "carrier", 1, 4);
  CHECK(attach_head(c, 0, left) == 1);

  auto two = compound({"pickup", "truck"});
  CHECK(attach_head(two, 0, t) == 1);
  CHECK_THROWS_AS(attach_head(two, 1, t), std::logic_error);
}

TEST_CASE("evaluate_compound: cutoff") {
  CompoundTable t;
  set_ratio(t, "fighter", "plane", 6, 10);
  set_ratio(t, "government", "plane", 1, 20);
  set_ratio(t, "cargo", "plane", 3, 4);
  CHECK(attachment_ratio(compound({"fighter", "plane"}), 0, t) == doctest::Approx(0.6));
  CHECK(attachment_ratio(compound({"government", "plane"}), 0, t) == doctest::Approx(0.05));

  auto kept = evaluate_compound(compound({"fighter", "plane"}), t, 0.25);
  REQUIRE(kept.has_value());
  CHECK(*kept == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(evaluate_compound(compound({"government", "plane"}), t, 0.25).has_value());
  CHECK(evaluate_compound(compound({"cargo", "plane"}), t, 0.25).has_value());
  // Unseen modifier.
  CHECK_FALSE(evaluate_compound(compound({"toy", "plane"}), t, 0.0).has_value());
  // Boundary: equal to the cutoff is kept.
  CHECK(evaluate_compound(compound({"fighter", "plane"}), t, 0.6).has_value());
}

TEST_CASE("evaluate_compound: omission cascade") {
  // a attaches to b; b fails the cutoff, so a goes too.
  CompoundTable t;
  set_ratio(t, "a", "b", 5, 5);
  set_ratio(t, "a", "c", 1, 5);
  set_ratio(t, "b", "c", 1, 10);
  CHECK(attach_head(compound({"a", "b", "c"}), 0, t) == 1);
  CHECK(attachment_ratio(compound({"a", "b", "c"}), 0, t) == 1.0);
  CHECK_FALSE(evaluate_compound(compound({"a", "b", "c"}), t, 0.25).has_value());

  // x attaches straight to the head and survives on its own.
  set_ratio(t, "x", "c", 4, 4);
  auto kept = evaluate_compound(compound({"x", "a", "b", "c"}), t, 0.25);
  REQUIRE(kept.has_value());
  CHECK(*kept == std::vector<std::size_t>{0, 3});
}

TEST_CASE("emit_compound_list") {
  CompoundTable t;
  set_ratio(t, "fighter", "plane", 6, 10);
  set_ratio(t, "passenger", "plane", 5, 5);
  set_ratio(t, "government", "plane", 1, 20);
  set_ratio(t, "pickup", "truck", 2, 2);

  std::vector<CompoundOccurrence> occ;
  for (int i = 0; i < 5; ++i) occ.push_back(compound({"fighter", "plane"}));
  occ.push_back(compound({"government", "plane"}));
  occ.push_back(compound({"passenger", "plane"}));
  occ.push_back(compound({"pickup", "truck"}));
  occ.push_back(compound({"government", "fighter", "plane"}));

  CHECK(emit_compound_list({}, occ, t, 0.25).empty());

  std::vector<RankedHead> heads = {{"plane", 1}};
  auto out = emit_compound_list(heads, occ, t, 0.25);
  REQUIRE(out.size() == 2);
  CHECK(out[0].kept_tokens == std::vector<std::string>{"fighter", "plane"});
  CHECK(out[0].head_rank == 1);
  CHECK(out[1].kept_tokens == std::vector<std::string>{"passenger", "plane"});

  std::map<std::string, Lemma> vocab;
  vocab["plane"] = parse_display_form("plane(s)");
  CHECK(display_compound(out[0], vocab) == "fighter plane(s)");
  CHECK(display_compound(out[1], vocab) == "passenger plane(s)");

  heads.push_back({"truck", 2});
  out = emit_compound_list(heads, occ, t, 0.25);
  REQUIRE(out.size() == 3);
  CHECK(out[2].head == "truck");
  CHECK(out[2].head_rank == 2);
}

TEST_CASE("compound_heads puts seeds first") {
  std::vector<RankedEntry> ranked = {{"x", 1, 3.0}, {"y", 2, 1.0}};
  auto heads = compound_heads({"b", "a"}, ranked);
  REQUIRE(heads.size() == 4);
  CHECK(heads[0].lemma == "a");
  CHECK(heads[0].rank == 0);
  CHECK(heads[1].lemma == "b");
  CHECK(heads[2].lemma == "x");
  CHECK(heads[2].rank == 1);
  CHECK(heads[3].rank == 2);
}

TEST_CASE("display_compound keeps proper-noun modifiers") {
  CompoundEntry e;
  e.source.tokens = {{"ford", "NNP", "Ford"}, {"big", "JJ", "BIG"}, {"truck", "NNS", "trucks"}};
  e.kept_positions = {0, 1, 2};
  e.kept_tokens = {"ford", "big", "truck"};
  e.head = "truck";
  CHECK(display_compound(e, {}) == "Ford big truck");
}

TEST_CASE("property: cutoff, uniqueness and monotone filtering") {
  std::mt19937_64 rng(31);
  const std::vector<std::string> words = {"a", "b", "c", "d", "e", "f"};
  for (int trial = 0; trial < 200; ++trial) {
    CompoundTable t;
    std::vector<CompoundOccurrence> occ;
    for (int k = 0; k < 25; ++k) {
      CompoundOccurrence c;
      const std::size_t len = 2 + rng() % 3;
      for (std::size_t p = 0; p < len; ++p) {
        const auto& w = words[rng() % words.size()];
        c.tokens.push_back({w, "NN", w});
      }
      auto keys = c.keys();
      t.add(keys);
      occ.push_back(std::move(c));
    }
    // Extra memberships lower some ratios.
    for (const auto& w : words) {
      if (rng() % 2) t.add_member(w, rng() % 6);
    }
    REQUIRE_NOTHROW(t.check_invariants());
    std::vector<RankedHead> heads;
    for (std::size_t i = 0; i < words.size(); ++i) heads.push_back({words[i], i});

    std::size_t previous = SIZE_MAX;
    for (double cutoff : {0.0, 0.1, 0.2, 0.25, 0.3, 0.5, 0.75, 0.9, 1.0}) {
      auto out = emit_compound_list(heads, occ, t, cutoff);
      std::set<std::vector<std::string>> seen;
      for (const auto& e : out) {
        CHECK(e.kept_tokens.size() >= 2);
        CHECK(seen.insert(e.kept_tokens).second);
        for (std::size_t k = 0; k + 1 < e.kept_positions.size(); ++k) {
          CHECK(attachment_ratio(e.source, e.kept_positions[k], t) >= cutoff);
        }
        CHECK(e.kept_positions.back() == e.source.head_index());
      }
      CHECK(out.size() <= previous);
      previous = out.size();
    }
  }
}
