#include <filesystem>
#include <random>
#include <sstream>

#include "doctest.h"
#include "lexboot/errors.hpp"
#include "lexboot/io.hpp"
#include "oracles.hpp"
#include "seed_lists.hpp"

using namespace lexboot;

namespace {

std::string counts_text(const CoocTable& c, const CompoundTable& k) {
  std::ostringstream out;
  write_counts(out, c, k);
  return out.str();
}

}  // namespace

TEST_CASE("counts file: empty and worked example") {
  CHECK(counts_text({}, {}) == "#PAIRS\n#COMPOUNDS\n#FREQ\n");

  auto trees = parse_trees("(S (NP (NNS planes) (, ,) (NNS trains) (, ,) (CC and) (NNS automobiles)) (VP (VBD left)))");
  auto c = accumulate(Extractor{}, trees);
  CHECK(counts_text(c.cooc, c.compounds) ==
        "#PAIRS\nautomobile\tplane\t1\nautomobile\ttrain\t1\nplane\ttrain\t1\n"
        "#COMPOUNDS\n"
        "#FREQ\nautomobile\t1\nplane\t1\ntrain\t1\n");
}

TEST_CASE("property: counts file round trips") {
  oracle::TreeGen gen(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::string corpus;
    for (int i = 0; i < 60; ++i) corpus += gen() + "\n";
    auto trees = parse_trees(corpus);
    auto c = accumulate(Extractor{}, trees);
    auto text = counts_text(c.cooc, c.compounds);
    std::istringstream in(text);
    auto back = read_counts(in);
    CHECK(back.cooc == c.cooc);
    // Members of compounds that never precede another token are not
    // recoverable; compare what the format carries.
    CHECK(back.compounds.right_counts() == c.compounds.right_counts());
    for (const auto& [key, n] : back.compounds.member_counts()) CHECK(c.compounds.member_count(key) == n);
    CHECK(counts_text(back.cooc, back.compounds) == text);
  }
}

TEST_CASE("counts file: malformed input") {
  auto bad = [](const std::string& s) {
    std::istringstream in(s);
    return read_counts(in);
  };
  CHECK_THROWS_AS(bad("a\tb\t1\n"), ParseError);
  CHECK_THROWS_AS(bad("#PAIRS\nb\ta\t1\n"), ParseError);
  CHECK_THROWS_AS(bad("#PAIRS\na\tb\n"), ParseError);
  CHECK_THROWS_AS(bad("#PAIRS\na\tb\tx\n"), ParseError);
  CHECK_THROWS_AS(bad("#COMPOUNDS\na\tb\t1\t2\na\tc\t1\t3\n"), ParseError);
  try {
    bad("#PAIRS\na\tb\t1\nb\ta\t1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 13);
  }
}

TEST_CASE("format_score round trips") {
  CHECK(format_score(0.5) == "0.5");
  CHECK(format_score(1.0) == "1");
  CHECK(format_score(0.0) == "0");
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(0.0, 1e6);
  for (int i = 0; i < 1000; ++i) {
    double v = d(rng);
    CHECK(std::stod(format_score(v)) == v);
  }
}

TEST_CASE("head list format") {
  std::vector<RankedEntry> ranked = {{"car", 1, 12.5}, {"bus", 2, 3.0}};
  std::map<std::string, Lemma> vocab;
  vocab["car"] = parse_display_form("car(s)");
  std::ostringstream out;
  write_head_list(out, ranked, vocab);
  CHECK(out.str() == "1\tcar(s)\t1\t12.5\n2\tbus\t2\t3\n");
}

TEST_CASE("seed parsing") {
  auto weapons = parse_seeds("bomb(s), weapon(s), rifle(s), missile(s), grenade(s), machinegun(s), dynamite\n");
  REQUIRE(weapons.size() == 7);
  CHECK(weapons[0].key == "bomb");
  CHECK(weapons[6].key == "dynamite");
  CHECK(display(weapons[6]) == "dynamite");

  auto lines = parse_seeds("# vehicles\ncar(s)\n\n  bus(es)  \r\ncar\n");
  REQUIRE(lines.size() == 2);
  CHECK(display(lines[0]) == "car(s)");
  CHECK(display(lines[1]) == "bus(es)");
  CHECK(parse_seeds("").empty());
  CHECK(parse_seeds("# only a comment\n").empty());
}

TEST_CASE("bundled seed files match the seed table") {
  const std::filesystem::path dir = LEXBOOT_SOURCE_DIR "/data/seeds";
  const std::pair<const char*, const std::vector<std::string>*> files[] = {
      {"vehicle.txt", &seed_lists::vehicle},       {"weapon.txt", &seed_lists::weapon},
      {"crimes_muc.txt", &seed_lists::crimes_muc}, {"crimes_wsj.txt", &seed_lists::crimes_wsj},
      {"machines.txt", &seed_lists::machines},
  };
  for (const auto& [name, forms] : files) {
    CAPTURE(name);
    auto seeds = read_seed_file(dir / name);
    REQUIRE(seeds.size() == forms->size());
    for (std::size_t i = 0; i < seeds.size(); ++i) CHECK(display(seeds[i]) == (*forms)[i]);
  }
  CHECK_THROWS_AS(read_seed_file(dir / "missing.txt"), ConfigError);
}

TEST_CASE("atomic write") {
  auto dir = std::filesystem::temp_directory_path() / "lexboot_io_test";
  std::filesystem::create_directories(dir);
  write_file_atomic(dir / "x.txt", "first");
  write_file_atomic(dir / "x.txt", "second");
  CHECK(read_file(dir / "x.txt") == "second");
  CHECK_FALSE(std::filesystem::exists(dir / "x.txt.tmp"));
  std::filesystem::remove_all(dir);
}
