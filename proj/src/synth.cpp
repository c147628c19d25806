#include "lexboot/synth.hpp"

#include <array>
#include <random>
#include <set>

#include "json.hpp"
#include "lexboot/errors.hpp"

namespace lexboot {

namespace {

constexpr std::array<std::string_view, 8> kCategoryPrefixes = {"ka", "mo", "ti", "zu", "pe", "lo", "fa", "ne"};
constexpr std::string_view kDistractorPrefix = "wo";
constexpr std::array<std::string_view, 5> kAdjectives = {"big", "old", "gray", "twin-engined", "nuclear-powered"};
constexpr std::array<std::string_view, 4> kVerbs = {"arrived", "left", "moved", "stopped"};

std::string prefix_for(std::size_t category) {
  if (category < kCategoryPrefixes.size()) return std::string(kCategoryPrefixes[category]);
  return "q" + synth_word("", category);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  template <typename Seq>
  const auto& pick(const Seq& seq) {
    return seq[below(seq.size())];
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<std::string> words_from_json(const nlohmann::json& j, std::string_view prefix, const char* what) {
  std::vector<std::string> out;
  if (j.is_number_integer()) {
    auto n = j.get<long long>();
    if (n < 0) throw ConfigError(std::string(what) + " count must be nonnegative");
    for (long long i = 0; i < n; ++i) out.push_back(synth_word(prefix, static_cast<std::size_t>(i)));
  } else if (j.is_array()) {
    for (const auto& w : j) {
      if (!w.is_string() || w.get<std::string>().empty()) throw ConfigError(std::string(what) + " must be nonempty strings");
      out.push_back(w.get<std::string>());
    }
  } else {
    throw ConfigError(std::string(what) + " must be a count or a list of words");
  }
  return out;
}

struct Writer {
  const SynthSpec& spec;
  Rng& rng;
  std::string out;

  void noun(const std::string& word) {
    if (rng.unit() < spec.plural_rate) {
      out += "(NNS " + word + "s)";
    } else {
      out += "(NN " + word + ")";
    }
  }

  std::vector<const std::string*> distinct(const std::vector<std::string>& pool, std::size_t n) {
    std::vector<const std::string*> chosen;
    std::set<std::size_t> used;
    while (chosen.size() < n) {
      std::size_t i = rng.below(pool.size());
      if (used.insert(i).second) chosen.push_back(&pool[i]);
    }
    return chosen;
  }

  void verb_phrase() { out += " (VP (VBD " + std::string(rng.pick(kVerbs)) + "))"; }

  void list(const SynthSpec::Category& cat) {
    const std::size_t hi = std::min(spec.list_max, cat.members.size());
    const std::size_t len = spec.list_min + rng.below(hi - spec.list_min + 1);
    auto items = distinct(cat.members, len);
    out += "(S (NP ";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out += i + 1 == items.size() ? (len > 2 ? " (, ,) (CC and) " : " (CC and) ") : " (, ,) ";
      noun(*items[i]);
    }
    out += ")";
    verb_phrase();
    out += ")";
  }

  void appositive(const SynthSpec::Category& cat) {
    auto items = distinct(cat.members, 2);
    out += "(S (NP (NP (DT the) ";
    noun(*items[0]);
    out += ") (, ,) (NP (DT a) (JJ " + std::string(rng.pick(kAdjectives)) + ") ";
    noun(*items[1]);
    out += "))";
    verb_phrase();
    out += ")";
  }

  void compound(const SynthSpec::Category& cat) {
    out += "(S (NP (DT the) ";
    if (rng.below(2) == 0) out += "(JJ " + std::string(rng.pick(kAdjectives)) + ") ";
    out += "(NN " + rng.pick(spec.distractors) + ") ";
    noun(rng.pick(cat.members));
    out += ")";
    verb_phrase();
    out += ")";
  }

  void distractor(const SynthSpec::Category& cat) {
    out += "(S (NP (DT the) ";
    noun(rng.pick(cat.members));
    out += ") (VP (VBD saw) (NP ";
    if (spec.distractors.size() >= 2) {
      auto pair = distinct(spec.distractors, 2);
      noun(*pair[0]);
      out += " (CC and) ";
      noun(*pair[1]);
    } else {
      noun(spec.distractors.front());
    }
    out += ")))";
  }
};

}  // namespace

std::string synth_word(std::string_view prefix, std::size_t index) {
  static constexpr std::string_view consonants = "bcdfgklmnprtv";
  static constexpr std::string_view vowels = "aeiou";
  std::string word(prefix);
  do {
    word += consonants[index % consonants.size()];
    index /= consonants.size();
    word += vowels[index % vowels.size()];
    index /= vowels.size();
  } while (index > 0);
  word += 'r';
  return word;
}

void SynthSpec::validate() const {
  if (categories.empty()) throw ConfigError("synth spec needs at least one category");
  if (list_min < 2 || list_max < list_min) throw ConfigError("list_length needs 2 <= min <= max");
  if (!(plural_rate >= 0.0 && plural_rate <= 1.0)) throw ConfigError("plural_rate must be in [0, 1]");
  for (double w : {w_list, w_appositive, w_compound, w_distractor}) {
    if (!(w >= 0.0)) throw ConfigError("template weights must be nonnegative");
  }
  if (w_list + w_appositive + w_compound + w_distractor <= 0.0) throw ConfigError("template weights sum to zero");
  std::set<std::string> seen;
  for (const auto& c : categories) {
    if (c.members.size() < list_min) throw ConfigError("category '" + c.name + "' has fewer members than list_length.min");
    for (const auto& m : c.members) {
      if (!seen.insert(m).second) throw ConfigError("word '" + m + "' appears in more than one category");
    }
  }
  if ((w_compound > 0.0 || w_distractor > 0.0) && distractors.empty()) {
    throw ConfigError("compound and distractor templates need distractor words");
  }
  for (const auto& d : distractors) {
    if (seen.count(d)) throw ConfigError("distractor '" + d + "' is also a category member");
  }
}

SynthSpec SynthSpec::from_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("synth spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("synth spec must be a JSON object");

  SynthSpec spec;
  try {
    auto sentences = j.value("sentences", 0LL);
    if (sentences < 0) throw ConfigError("sentences must be nonnegative");
    spec.sentences = static_cast<std::size_t>(sentences);
    if (j.contains("list_length")) {
      spec.list_min = j["list_length"].value("min", spec.list_min);
      spec.list_max = j["list_length"].value("max", spec.list_max);
    }
    spec.plural_rate = j.value("plural_rate", spec.plural_rate);
    if (j.contains("templates")) {
      const auto& t = j["templates"];
      spec.w_list = t.value("list", 0.0);
      spec.w_appositive = t.value("appositive", 0.0);
      spec.w_compound = t.value("compound", 0.0);
      spec.w_distractor = t.value("distractor", 0.0);
    }
    if (!j.contains("categories") || !j["categories"].is_array()) throw ConfigError("synth spec needs a categories array");
    std::size_t idx = 0;
    for (const auto& c : j["categories"]) {
      Category cat;
      cat.name = c.value("name", "category" + std::to_string(idx));
      if (!c.contains("members")) throw ConfigError("category '" + cat.name + "' has no members");
      cat.members = words_from_json(c["members"], prefix_for(idx), "members");
      spec.categories.push_back(std::move(cat));
      ++idx;
    }
    if (j.contains("distractors")) spec.distractors = words_from_json(j["distractors"], kDistractorPrefix, "distractors");
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad synth spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

SynthSpec SynthSpec::two_clique() {
  SynthSpec spec;
  spec.sentences = 200;
  for (std::size_t c = 0; c < 2; ++c) {
    Category cat{c == 0 ? "A" : "B", {}};
    for (std::size_t i = 0; i < 30; ++i) cat.members.push_back(synth_word(prefix_for(c), i));
    spec.categories.push_back(std::move(cat));
  }
  for (std::size_t i = 0; i < 20; ++i) spec.distractors.push_back(synth_word(kDistractorPrefix, i));
  return spec;
}

std::string generate_treebank(const SynthSpec& spec, std::uint64_t seed) {
  spec.validate();
  Rng rng(seed);
  Writer w{spec, rng, {}};
  const double total = spec.w_list + spec.w_appositive + spec.w_compound + spec.w_distractor;
  for (std::size_t s = 0; s < spec.sentences; ++s) {
    const auto& cat = spec.categories[rng.below(spec.categories.size())];
    double r = rng.unit() * total;
    if ((r -= spec.w_list) < 0.0) {
      w.list(cat);
    } else if ((r -= spec.w_appositive) < 0.0) {
      w.appositive(cat);
    } else if ((r -= spec.w_compound) < 0.0) {
      w.compound(cat);
    } else if (spec.distractors.empty()) {
      w.list(cat);
    } else {
      w.distractor(cat);
    }
    w.out += '\n';
  }
  return std::move(w.out);
}

}  // namespace lexboot
