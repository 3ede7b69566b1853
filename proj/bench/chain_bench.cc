// Parallel versus serial chain building on synthetic documents.

#include <benchmark/benchmark.h>

#include <memory>
#include <string>
#include <vector>

#include "lexchain/chainer.h"
#include "lexchain/synthetic.h"
#include "lexchain/textprep.h"
#include "lexchain/thesaurus.h"

namespace {

using namespace lexchain;

struct Corpus {
  ThesaurusIndex index;
  std::vector<std::string> stop_words = {"the", "of", "and", "a", "to", "in", "is", "it"};
  std::vector<Head> heads;
  std::vector<std::string> vocabulary;
};

const Corpus& Shared() {
  static const Corpus* corpus = [] {
    auto* c = new Corpus;
    const synthetic::ThesaurusShape shape;
    c->vocabulary = synthetic::MakeVocabulary(shape.vocabulary, 1);
    c->heads = synthetic::MakeHeads(shape, c->vocabulary, 2);
    c->index = ThesaurusIndex::FromHeads(c->heads);
    return c;
  }();
  return *corpus;
}

PreparedText Document(std::size_t tokens) {
  const Corpus& c = Shared();
  StopList stoplist;
  for (const auto& word : c.stop_words) stoplist.Add(word);
  return PrepareText(synthetic::MakeDocument(c.heads, c.vocabulary, c.stop_words, tokens, 3),
                     c.index, stoplist);
}

void BM_BuildAllChainsSerial(benchmark::State& state) {
  const PreparedText text = Document(static_cast<std::size_t>(state.range(0)));
  const ChainParams params;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildAllChainsSerial(text.tokens, Shared().index, params));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BuildAllChains(benchmark::State& state) {
  const PreparedText text = Document(static_cast<std::size_t>(state.range(0)));
  const ChainParams params;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildAllChains(text.tokens, Shared().index, params));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ChainTokens(benchmark::State& state) {
  const PreparedText text = Document(static_cast<std::size_t>(state.range(0)));
  const ChainParams params;
  const auto execution = state.range(1) ? Execution::kParallel : Execution::kSerial;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ChainTokens(text.tokens, Shared().index, params, execution));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_BuildAllChainsSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildAllChains)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ChainTokens)
    ->ArgsProduct({{10000}, {0, 1}})
    ->ArgNames({"tokens", "parallel"})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
