// Copyright 2026 The bcrf Authors
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

// Serial reference vs OpenMP kernel timings.

#include <benchmark/benchmark.h>

#include "bcrf/adam.h"
#include "bcrf/batch.h"
#include "bcrf/synthetic.h"

namespace bcrf {
namespace {

Model RandomModel(std::size_t dim) {
  Rng rng(1);
  Model m;
  m.config.hash_dim = dim;
  m.emitter = EmitterWeights::Zeros(dim, m.config.hash_seed);
  for (auto& row : m.emitter.weights) row = {rng.Normal(), rng.Normal()};
  return m;
}

const std::vector<TextRecord>& Corpus() {
  static const auto* corpus = [] {
    SyntheticCorpusConfig c;
    c.records = 256;
    return new std::vector<TextRecord>(
        MakeSyntheticCorpus(MakeSyntheticVocabulary(400, 7), c));
  }();
  return *corpus;
}

const Model& SharedModel() {
  static const Model* model = new Model(RandomModel(kDefaultHashDim));
  return *model;
}

template <bool kParallel>
void BM_PredictBatch(benchmark::State& state) {
  const auto& recs = Corpus();
  const auto& m = SharedModel();
  for (auto _ : state) {
    auto out = kParallel ? PredictBatch(m, recs, Approach::kConfirmedChange)
                         : PredictBatchSerial(m, recs, Approach::kConfirmedChange);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(recs.size()));
}
BENCHMARK(BM_PredictBatch<false>)->Name("PredictBatch/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PredictBatch<true>)->Name("PredictBatch/parallel")->Unit(benchmark::kMillisecond);

template <bool kParallel>
void BM_NllPerExample(benchmark::State& state) {
  const auto& m = SharedModel();
  std::vector<TrainingExample> ex;
  for (const auto& r : Corpus()) {
    const auto words = SplitWords(r.text);
    ex.push_back({FeaturizeAll(words, m.emitter.hash_seed, m.emitter.dim),
                  LabelsFromBoundary(*r.label, words.size())});
  }
  for (auto _ : state) {
    auto out = kParallel ? NllPerExample(m, ex) : NllPerExampleSerial(m, ex);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ex.size()));
}
BENCHMARK(BM_NllPerExample<false>)->Name("NllPerExample/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NllPerExample<true>)->Name("NllPerExample/parallel")->Unit(benchmark::kMillisecond);

template <bool kParallel>
void BM_AdamUpdateRows(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  std::vector<LabelScores> p(n), g(n), m1(n), v1(n);
  for (auto& row : g) row = {rng.Normal(), rng.Normal()};
  std::vector<std::uint32_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = static_cast<std::uint32_t>(i);
  const AdamHyper h{1e-2, 1e-2};
  std::uint64_t step = 0;
  for (auto _ : state) {
    ++step;
    if (kParallel) {
      AdamUpdateRows(p, g, m1, v1, rows, step, h);
    } else {
      AdamUpdateRowsSerial(p, g, m1, v1, rows, step, h);
    }
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_AdamUpdateRows<false>)->Name("AdamUpdateRows/serial")->Arg(1 << 12)->Arg(1 << 18);
BENCHMARK(BM_AdamUpdateRows<true>)->Name("AdamUpdateRows/parallel")->Arg(1 << 12)->Arg(1 << 18);

}  // namespace
}  // namespace bcrf

BENCHMARK_MAIN();
