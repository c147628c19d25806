#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "lexboot/errors.hpp"
#include "lexboot/morph.hpp"
#include "seed_lists.hpp"

using namespace lexboot;

TEST_CASE("lemmatize: singular, plural and pass-through tags") {
  Lemmatizer lm;
  CHECK(lm.lemmatize("car", "NN") == "car");
  CHECK(lm.lemmatize("Car", "NN") == "car");
  CHECK(lm.lemmatize("bodegas", "NNS") == "bodega");
  CHECK(lm.lemmatize("agencies", "NNS") == "agency");
  CHECK(lm.lemmatize("buses", "NNS") == "bus");
  CHECK(lm.lemmatize("boxes", "NNS") == "box");
  CHECK(lm.lemmatize("churches", "NNS") == "church");
  CHECK(lm.lemmatize("dishes", "NNS") == "dish");
  CHECK(lm.lemmatize("waltzes", "NNS") == "waltz");
  CHECK(lm.lemmatize("Escorts", "NNPS") == "escort");
  CHECK(lm.lemmatize("Nuclear-powered", "JJ") == "nuclear-powered");
  CHECK(lm.lemmatize("20-KG", "CD") == "20-kg");
}

TEST_CASE("lemmatize: rule boundaries") {
  Lemmatizer lm;
  // "-ies" needs more than four letters; "ties" falls through to "-s".
  CHECK(lm.analyze("ties", "NNS").key == "tie");
  CHECK(lm.analyze("ties", "NNS").rule == PluralRule::S);
  // "-s" needs more than three letters.
  CHECK(lm.analyze("gas", "NNS").key == "gas");
  CHECK(lm.analyze("gas", "NNS").rule == PluralRule::Unmatched);
  CHECK(lm.analyze("men", "NNS").key == "men");
  CHECK(lm.analyze("men", "NNS").rule == PluralRule::Unmatched);
  // "-es" only after sibilants; otherwise plain "-s".
  CHECK(lm.analyze("tortures", "NNS").key == "torture");
  CHECK(lm.analyze("tortures", "NNS").rule == PluralRule::S);
  CHECK(lm.analyze("Agencies", "NNPS").stem == "Agency");
}

TEST_CASE("lemmatize rejects empty surface") {
  Lemmatizer lm;
  CHECK_THROWS_AS(lm.lemmatize("", "NN"), std::invalid_argument);
}

TEST_CASE("exceptions override the rules") {
  Lemmatizer lm;
  lm.add_exception("Aircrafts", "aircraft");
  auto a = lm.analyze("aircrafts", "NNS");
  CHECK(a.key == "aircraft");
  CHECK(a.rule == PluralRule::Exception);
  Lemma l;
  l.observe(a, "NNS");
  l.observe(lm.analyze("aircraft", "NN"), "NN");
  CHECK(display(l) == "aircraft(s)");
  // Singular tags never consult the table.
  CHECK(lm.lemmatize("aircrafts", "NN") == "aircrafts");
}

TEST_CASE("exceptions file") {
  auto dir = std::filesystem::temp_directory_path() / "lexboot_morph_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "exc.tsv");
    f << "# irregulars\n\nmen\tman\ncriteria\tcriterion\n";
  }
  auto lm = Lemmatizer::from_exceptions_file(dir / "exc.tsv");
  CHECK(lm.lemmatize("men", "NNS") == "man");
  CHECK(lm.lemmatize("criteria", "NNS") == "criterion");
  {
    std::ofstream f(dir / "bad.tsv");
    f << "men man\n";
  }
  CHECK_THROWS_AS(Lemmatizer::from_exceptions_file(dir / "bad.tsv"), ConfigError);
  CHECK_THROWS_AS(Lemmatizer::from_exceptions_file(dir / "missing.tsv"), ConfigError);
}

namespace {
Lemma observe_all(const Lemmatizer& lm, std::initializer_list<std::pair<const char*, const char*>> forms) {
  Lemma l;
  for (auto [surface, tag] : forms) l.observe(lm.analyze(surface, tag), tag);
  return l;
}
}  // namespace

TEST_CASE("display convention") {
  Lemmatizer lm;
  CHECK(display(observe_all(lm, {{"car", "NN"}, {"cars", "NNS"}})) == "car(s)");
  CHECK(display(observe_all(lm, {{"buses", "NNS"}})) == "bus(es)");
  CHECK(display(observe_all(lm, {{"dynamite", "NN"}})) == "dynamite");
  CHECK(display(observe_all(lm, {{"bodegas", "NNS"}})) == "bodega(s)");
  CHECK(display(observe_all(lm, {{"robberies", "NNS"}, {"robbery", "NN"}})) == "robbery(es)");
  CHECK(display(observe_all(lm, {{"men", "NNS"}})) == "men");
  CHECK(display(observe_all(lm, {{"Escorts", "NNPS"}, {"Escort", "NNP"}})) == "Escort(s)");
  CHECK(display(observe_all(lm, {{"Cherokee", "NNP"}})) == "Cherokee");
}

TEST_CASE("property: lemmatize is idempotent on singular tags") {
  Lemmatizer lm;
  std::mt19937 rng(3);
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyzABCXYZ-s";
  for (int i = 0; i < 2000; ++i) {
    std::string w;
    std::size_t len = 1 + rng() % 12;
    for (std::size_t k = 0; k < len; ++k) w += alphabet[rng() % alphabet.size()];
    for (const char* tag : {"NN", "NNS", "NNP", "NNPS", "JJ", "CD"}) {
      auto once = lm.lemmatize(w, tag);
      CHECK(lm.lemmatize(once, "NN") == once);
      CHECK(!once.empty());
    }
  }
}

TEST_CASE("property: observation order does not change the merged lemma") {
  Lemmatizer lm;
  std::vector<std::pair<std::string, std::string>> forms = {
      {"Car", "NNP"}, {"cars", "NNS"}, {"CAR", "NNP"}, {"car", "NN"}, {"Cars", "NNPS"}};
  Lemma reference;
  for (auto& [s, t] : forms) reference.observe(lm.analyze(s, t), t);
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    std::shuffle(forms.begin(), forms.end(), rng);
    Lemma a, b;
    for (std::size_t k = 0; k < forms.size(); ++k) {
      (k % 2 ? a : b).observe(lm.analyze(forms[k].first, forms[k].second), forms[k].second);
    }
    a.merge(b);
    CHECK(display(a) == display(reference));
    CHECK(a.proper_stem == reference.proper_stem);
  }
}

TEST_CASE("seed display forms from the seed table are collision free and round trip") {
  std::set<std::string> keys;
  for (const auto& form : seed_lists::all_distinct()) {
    Lemma l = parse_display_form(form);
    CHECK(display(l) == form);
    keys.insert(l.key);
  }
  CHECK(keys.size() == seed_lists::all_distinct().size());
  CHECK(parse_display_form("bus(es)").key == "bus");
  CHECK(parse_display_form("car(s)").key == "car");
  CHECK_THROWS_AS(parse_display_form("(s)"), ConfigError);
}
