// Copyright 2026 The HELFI Tools Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "helfi/alignment.h"
#include "helfi/concordance.h"
#include "helfi/format.h"
#include "helfi/tokenization.h"
#include "helfi/validator.h"
#include "support/generators.h"

namespace helfi {
namespace {

std::string RandomCorpusText(int verses) {
  std::mt19937 rng(17);
  return Serialize(testing::RandomCorpus(rng, verses), FormatProfile::Strict());
}

void BM_ParseCorpus(benchmark::State& state) {
  const std::string text = RandomCorpusText(static_cast<int>(state.range(0)));
  auto config = std::make_shared<const CorpusConfig>();
  for (auto _ : state) {
    CorpusParse parsed = ParseCorpusText(text, FormatProfile::Strict(), config);
    benchmark::DoNotOptimize(parsed.corpus.size());
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseCorpus)->Arg(100)->Arg(2000);

void BM_Serialize(benchmark::State& state) {
  std::mt19937 rng(3);
  const Corpus corpus = testing::RandomCorpus(rng, 2000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Serialize(corpus, FormatProfile::Strict()));
  }
}
BENCHMARK(BM_Serialize);

void BM_AlignmentGroups(benchmark::State& state) {
  std::mt19937 rng(5);
  testing::RandomVerseOptions options;
  options.max_words = static_cast<int>(state.range(0));
  options.max_target_rows = 2 * options.max_words;
  std::vector<VerseAlignment> verses;
  for (int i = 0; i < 256; ++i) {
    verses.push_back(testing::RandomVerse(rng, VerseRef{"gen", 1, i + 1}, options));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(AlignmentGroups(verses[i++ % verses.size()]));
  }
}
BENCHMARK(BM_AlignmentGroups)->Arg(8)->Arg(32);

void BM_Validate(benchmark::State& state) {
  std::mt19937 rng(9);
  const Corpus corpus = testing::RandomCorpus(rng, 2000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ValidateCorpus(corpus).verses);
  }
}
BENCHMARK(BM_Validate);

void BM_BuildIndex(benchmark::State& state) {
  std::mt19937 rng(11);
  const Corpus corpus = testing::RandomCorpus(rng, 2000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildIndex(corpus).size());
  }
}
BENCHMARK(BM_BuildIndex);

void BM_Harmonize(benchmark::State& state) {
  std::mt19937 rng(13);
  std::vector<SegmentedWord> words;
  for (int i = 0; i < 1024; ++i) words.push_back(testing::RandomWord(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const SegmentedWord& w = words[i++ % words.size()];
    benchmark::DoNotOptimize(
        Harmonize(w, ClassifySplit(w), {"Gen.1:1", static_cast<int>(i)}));
  }
}
BENCHMARK(BM_Harmonize);

}  // namespace
}  // namespace helfi

BENCHMARK_MAIN();
