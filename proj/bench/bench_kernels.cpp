// Serial reference paths against the OpenMP kernels on a synthetic corpus.

#include <benchmark/benchmark.h>

#include "lexboot/bootstrap.hpp"
#include "lexboot/extract.hpp"
#include "lexboot/synth.hpp"

using namespace lexboot;

namespace {

const std::vector<Tree>& corpus() {
  static const std::vector<Tree> trees = [] {
    SynthSpec spec;
    spec.sentences = 20000;
    spec.list_max = 6;
    for (std::size_t c = 0; c < 6; ++c) {
      SynthSpec::Category cat{"c" + std::to_string(c), {}};
      for (std::size_t i = 0; i < 400; ++i) cat.members.push_back(synth_word(std::string(1, static_cast<char>('a' + c)), i));
      spec.categories.push_back(std::move(cat));
    }
    for (std::size_t i = 0; i < 200; ++i) spec.distractors.push_back(synth_word("wo", i));
    return parse_trees(generate_treebank(spec, 1));
  }();
  return trees;
}

const CoocTable& table() {
  static const CoocTable t = accumulate(Extractor{}, corpus()).cooc;
  return t;
}

const std::set<std::string> kSeeds = {synth_word("a", 0), synth_word("a", 1), synth_word("a", 2)};

void BM_AccumulateSerial(benchmark::State& state) {
  Extractor ex;
  for (auto _ : state) benchmark::DoNotOptimize(accumulate(ex, corpus()));
}

void BM_AccumulateParallel(benchmark::State& state) {
  Extractor ex;
  for (auto _ : state) benchmark::DoNotOptimize(accumulate_parallel(ex, corpus()));
}

void BM_BootstrapReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::bootstrap(table(), kSeeds));
}

void BM_BootstrapKernel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bootstrap(table(), kSeeds));
}

}  // namespace

BENCHMARK(BM_AccumulateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AccumulateParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BootstrapReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BootstrapKernel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
