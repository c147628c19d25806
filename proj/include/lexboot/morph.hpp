#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace lexboot {

bool is_noun_tag(std::string_view tag);
bool is_plural_noun_tag(std::string_view tag);
bool is_proper_noun_tag(std::string_view tag);
/// JJ or CD: allowed inside compounds, never a head.
bool is_modifier_tag(std::string_view tag);

/// How a plural surface form was reduced to its key.
enum class PluralRule {
  None,       // singular or non-noun tag
  Ies,        // agencies -> agency
  Es,         // buses -> bus
  S,          // cars -> car
  Exception,  // listed in the exceptions file
  Unmatched,  // plural tag but no rule applied (men, aircraft)
};

struct Analysis {
  std::string key;
  PluralRule rule = PluralRule::None;
  /// Surface with the plural ending removed, original case kept.
  std::string stem;
};

/// Rule-based singular/plural merging with an optional override table.
class Lemmatizer {
 public:
  Lemmatizer() = default;

  /// Loads "plural_surface<TAB>singular_key" lines. Blank lines and '#'
  /// comments are skipped. Throws ConfigError on malformed lines.
  static Lemmatizer from_exceptions_file(const std::filesystem::path& path);

  void add_exception(std::string_view plural_surface, std::string_view singular_key);

  /// Throws std::invalid_argument on an empty surface.
  Analysis analyze(std::string_view surface, std::string_view tag) const;
  std::string lemmatize(std::string_view surface, std::string_view tag) const {
    return analyze(surface, tag).key;
  }

 private:
  std::map<std::string, std::string, std::less<>> exceptions_;
};

std::string to_lower(std::string_view s);

/// Observed forms of one key, merged over the corpus.
struct Lemma {
  std::string key;
  bool seen_singular = false;
  bool seen_plural = false;
  /// Strongest plural rule seen: Es wins over S/Ies/Exception, which win
  /// over Unmatched.
  PluralRule plural_rule = PluralRule::None;
  /// Original-case stem from NNP/NNPS occurrences; smallest one if several.
  std::string proper_stem;

  /// Folds one occurrence in. The result does not depend on call order.
  void observe(const Analysis& a, std::string_view tag);
  void merge(const Lemma& other);
};

/// "car(s)", "bus(es)", "dynamite", "Escort(s)".
std::string display(const Lemma& lemma);

/// Display forms as found in seed lists: "bus(es)" -> key "bus", rule Es.
/// The returned lemma renders back to the same string under display().
Lemma parse_display_form(std::string_view form);

}  // namespace lexboot
