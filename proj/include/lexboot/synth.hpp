#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lexboot {

/// Parameters for the synthetic treebank generator. Category members only
/// ever share an NP with members of the same category, so categories form
/// disjoint co-occurrence cliques.
struct SynthSpec {
  struct Category {
    std::string name;
    /// Singular lowercase member words.
    std::vector<std::string> members;
  };

  std::size_t sentences = 0;
  std::size_t list_min = 2;
  std::size_t list_max = 4;
  double plural_rate = 0.25;
  /// Relative weights of the sentence templates.
  double w_list = 0.5;
  double w_appositive = 0.2;
  double w_compound = 0.15;
  double w_distractor = 0.15;
  std::vector<Category> categories;
  /// Words used as compound modifiers and distractor objects.
  std::vector<std::string> distractors;

  /// Throws ConfigError if the spec cannot generate sentences.
  void validate() const;

  /// JSON form:
  ///   {"sentences": 200, "list_length": {"min": 2, "max": 4},
  ///    "plural_rate": 0.25,
  ///    "templates": {"list": .5, "appositive": .2, "compound": .15, "distractor": .15},
  ///    "categories": [{"name": "A", "members": 30}, {"name": "B", "members": ["x", "y"]}],
  ///    "distractors": 20}
  /// A number in place of a word list generates that many unique words.
  static SynthSpec from_json(std::string_view json_text);

  /// 30 + 30 member cliques, 200 sentences.
  static SynthSpec two_clique();
};

/// Bracketed trees, one per line. Output depends only on (spec, seed).
std::string generate_treebank(const SynthSpec& spec, std::uint64_t seed);

/// Deterministic pronounceable word for (prefix, index): "kabar", "kacer".
std::string synth_word(std::string_view prefix, std::size_t index);

}  // namespace lexboot
