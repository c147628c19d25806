#include "lexboot/morph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

#include "lexboot/errors.hpp"

namespace lexboot {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

int strength(PluralRule r) {
  switch (r) {
    case PluralRule::None: return 0;
    case PluralRule::Unmatched: return 1;
    case PluralRule::Exception: return 2;
    case PluralRule::S: return 3;
    case PluralRule::Ies: return 4;
    case PluralRule::Es: return 5;
  }
  return 0;
}

bool has_upper(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

bool is_noun_tag(std::string_view tag) { return tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS"; }
bool is_plural_noun_tag(std::string_view tag) { return tag == "NNS" || tag == "NNPS"; }
bool is_proper_noun_tag(std::string_view tag) { return tag == "NNP" || tag == "NNPS"; }
bool is_modifier_tag(std::string_view tag) { return tag == "JJ" || tag == "CD"; }

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

Lemmatizer Lemmatizer::from_exceptions_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read exceptions file " + path.string());
  Lemmatizer lm;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() || line.find('\t', tab + 1) != std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected plural<TAB>singular");
    }
    lm.add_exception(line.substr(0, tab), line.substr(tab + 1));
  }
  return lm;
}

void Lemmatizer::add_exception(std::string_view plural_surface, std::string_view singular_key) {
  exceptions_[to_lower(plural_surface)] = to_lower(singular_key);
}

Analysis Lemmatizer::analyze(std::string_view surface, std::string_view tag) const {
  if (surface.empty()) throw std::invalid_argument("empty surface form");
  Analysis a;
  a.key = to_lower(surface);
  a.stem = std::string(surface);
  if (!is_plural_noun_tag(tag)) return a;

  if (auto it = exceptions_.find(a.key); it != exceptions_.end()) {
    a.key = it->second;
    a.stem = it->second;
    a.rule = PluralRule::Exception;
    return a;
  }

  const std::string& low = a.key;
  auto chop = [&](std::size_t n, std::string_view add, PluralRule rule) {
    a.key = low.substr(0, low.size() - n) + std::string(add);
    a.stem = std::string(surface.substr(0, surface.size() - n)) + std::string(add);
    a.rule = rule;
  };

  if (ends_with(low, "ies") && low.size() > 4) {
    chop(3, "y", PluralRule::Ies);
  } else if (ends_with(low, "es") &&
             [&] {
               std::string_view stem(low.data(), low.size() - 2);
               return ends_with(stem, "s") || ends_with(stem, "x") || ends_with(stem, "z") || ends_with(stem, "ch") ||
                      ends_with(stem, "sh");
             }()) {
    chop(2, "", PluralRule::Es);
  } else if (ends_with(low, "s") && low.size() > 3) {
    chop(1, "", PluralRule::S);
  } else {
    a.rule = PluralRule::Unmatched;
  }
  return a;
}

void Lemma::observe(const Analysis& a, std::string_view tag) {
  if (key.empty()) key = a.key;
  if (is_plural_noun_tag(tag)) {
    seen_plural = true;
    if (strength(a.rule) > strength(plural_rule)) plural_rule = a.rule;
  } else {
    seen_singular = true;
  }
  if (is_proper_noun_tag(tag) && (proper_stem.empty() || a.stem < proper_stem)) proper_stem = a.stem;
}

void Lemma::merge(const Lemma& other) {
  if (key.empty()) key = other.key;
  seen_singular = seen_singular || other.seen_singular;
  seen_plural = seen_plural || other.seen_plural;
  if (strength(other.plural_rule) > strength(plural_rule)) plural_rule = other.plural_rule;
  if (!other.proper_stem.empty() && (proper_stem.empty() || other.proper_stem < proper_stem)) {
    proper_stem = other.proper_stem;
  }
}

std::string display(const Lemma& lemma) {
  std::string out = lemma.proper_stem.empty() ? lemma.key : lemma.proper_stem;
  if (!lemma.seen_plural) return out;
  switch (lemma.plural_rule) {
    case PluralRule::Es:
    case PluralRule::Ies: return out + "(es)";
    case PluralRule::S:
    case PluralRule::Exception: return out + "(s)";
    case PluralRule::Unmatched:
    case PluralRule::None: return out;
  }
  return out;
}

Lemma parse_display_form(std::string_view form) {
  Lemma lemma;
  lemma.seen_singular = true;
  std::string_view base = form;
  if (ends_with(form, "(es)")) {
    base = form.substr(0, form.size() - 4);
    lemma.seen_plural = true;
    lemma.plural_rule = PluralRule::Es;
  } else if (ends_with(form, "(s)")) {
    base = form.substr(0, form.size() - 3);
    lemma.seen_plural = true;
    lemma.plural_rule = PluralRule::S;
  }
  if (base.empty()) throw ConfigError("empty lemma in display form '" + std::string(form) + "'");
  lemma.key = to_lower(base);
  if (has_upper(base)) lemma.proper_stem = std::string(base);
  return lemma;
}

}  // namespace lexboot
