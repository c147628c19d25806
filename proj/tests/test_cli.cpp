// Drives the lexboot executable end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "lexboot/io.hpp"
#include "lexboot/synth.hpp"

namespace fs = std::filesystem;

namespace {

struct Workdir {
  fs::path path;
  explicit Workdir(const std::string& name) : path(fs::temp_directory_path() / ("lexboot_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~Workdir() { fs::remove_all(path); }
  fs::path operator/(const std::string& f) const { return path / f; }
  void write(const std::string& f, const std::string& text) const { std::ofstream(path / f, std::ios::binary) << text; }
};

int run(const std::string& args, const fs::path& out_file) {
  const std::string cmd =
      std::string(LEXBOOT_CLI_PATH) + " " + args + " >" + out_file.string() + " 2>" + out_file.string() + ".err";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kPlanes = "(S (NP (NNS planes) (, ,) (NNS trains) (, ,) (CC and) (NNS automobiles)) (VP (VBD left)))\n";

}  // namespace

TEST_CASE("cli: usage errors exit 1") {
  Workdir w("usage");
  CHECK(run("", w / "o") == 1);
  CHECK(run("frobnicate", w / "o") == 1);
  CHECK(run("freq " + (w / "missing.mrg").string(), w / "o") == 1);
  w.write("c.mrg", kPlanes);
  CHECK(run("freq -k 0 " + (w / "c.mrg").string(), w / "o") == 1);
  CHECK(run("run " + (w / "c.mrg").string() + " --seeds " + (w / "none.txt").string() + " --out " +
                (w / "out").string(),
            w / "o") == 1);
  CHECK(run("synth", w / "o") == 1);
}

TEST_CASE("cli: freq") {
  Workdir w("freq");
  std::string corpus;
  for (int i = 0; i < 10; ++i) corpus += "(S (NP (NNS planes)) (VP (VBD left)))\n";
  corpus += "(NP (NN zebra) (CC and) (NN yak))\n(NP (NN yak) (CC and) (NN zebra))\n";
  w.write("c.mrg", corpus);
  CHECK(run("freq -k 1 " + (w / "c.mrg").string(), w / "o") == 0);
  CHECK(lexboot::read_file(w / "o") == "plane(s)\t10\n");
  CHECK(run("freq -k 50 " + (w / "c.mrg").string(), w / "o") == 0);
  CHECK(lexboot::read_file(w / "o") == "plane(s)\t10\nyak\t2\nzebra\t2\n");
}

TEST_CASE("cli: extract") {
  Workdir w("extract");
  w.write("empty.mrg", "");
  CHECK(run("extract " + (w / "empty.mrg").string(), w / "o") == 0);
  CHECK(lexboot::read_file(w / "o") == "#PAIRS\n#COMPOUNDS\n#FREQ\n");

  w.write("c.mrg", kPlanes);
  CHECK(run("extract " + (w / "c.mrg").string() + " --out " + (w / "counts").string(), w / "o") == 0);
  auto text = lexboot::read_file(w / "counts" / "counts.tsv");
  CHECK(text.rfind("#PAIRS\nautomobile\tplane\t1\nautomobile\ttrain\t1\nplane\ttrain\t1\n#COMPOUNDS\n", 0) == 0);

  // Corrupt second tree: error names file and offset, nothing written.
  w.write("bad.mrg", std::string(kPlanes) + "(S (NP (NN dog cat)))\n");
  CHECK(run("extract " + (w / "bad.mrg").string() + " --out " + (w / "badout").string(), w / "o") == 2);
  auto err = lexboot::read_file(w.path / "o.err");
  CHECK(err.find("bad.mrg") != std::string::npos);
  CHECK(err.find("offset") != std::string::npos);
  CHECK_FALSE(fs::exists(w / "badout" / "counts.tsv"));
}

TEST_CASE("cli: synth, run and determinism") {
  Workdir w("run");
  const std::string synth = "synth --preset two-clique --rng-seed 7 --out " + w.path.string();
  CHECK(run(synth, w / "o") == 0);
  const auto corpus_bytes = lexboot::read_file(w / "corpus.mrg");
  CHECK(corpus_bytes == lexboot::generate_treebank(lexboot::SynthSpec::two_clique(), 7));

  const auto a = lexboot::SynthSpec::two_clique().categories[0].members;
  w.write("seeds.txt", a[0] + "\n" + a[1] + "\n" + a[2] + "\n" + a[3] + "\n" + a[4] + "\n");
  const std::string args = "run " + (w / "corpus.mrg").string() + " --seeds " + (w / "seeds.txt").string() +
                           " --cutoff 0.25 --out ";
  CHECK(run(args + (w / "r1").string(), w / "o") == 0);
  CHECK(run("--threads 3 " + args + (w / "r2").string(), w / "o") == 0);
  for (const char* f : {"heads.tsv", "compounds.tsv", "report.txt"}) {
    CAPTURE(f);
    CHECK(lexboot::read_file(w / "r1" / f) == lexboot::read_file(w / "r2" / f));
  }
  const auto heads = lexboot::read_file(w / "r1" / "heads.tsv");
  CHECK(heads.find("\tmo") == std::string::npos);
  CHECK(heads.find("\tka") != std::string::npos);
  const auto report = lexboot::read_file(w / "r1" / "report.txt");
  CHECK(report.find("seeds used:") != std::string::npos);
  CHECK(report.find("candidate pool:") != std::string::npos);

  // Seeds absent from the corpus: configuration error, no lists written.
  w.write("vehicle.txt", "plane(s), helicopter(s), car(s)\n");
  CHECK(run("run " + (w / "corpus.mrg").string() + " --seeds " + (w / "vehicle.txt").string() + " --out " +
                (w / "r3").string(),
            w / "o") == 1);
  CHECK_FALSE(fs::exists(w / "r3" / "heads.tsv"));

  // Config file supplies flags; the command line wins.
  w.write("cfg.txt", "# settings\niterations = 1\ncutoff=0.9\n");
  CHECK(run("--config " + (w / "cfg.txt").string() + " " + args + (w / "r4").string(), w / "o") == 0);
  CHECK(lexboot::read_file(w / "r4" / "report.txt").find("iterations per phase: 1\n") != std::string::npos);
  CHECK(lexboot::read_file(w / "r4" / "report.txt").find("compound cutoff: 0.25\n") != std::string::npos);
  w.write("badcfg.txt", "rng-seed=3\n");
  CHECK(run("--config " + (w / "badcfg.txt").string() + " " + args + (w / "r5").string(), w / "o") == 1);
}
