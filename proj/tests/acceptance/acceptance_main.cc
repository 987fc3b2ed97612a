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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <string>

#include "bcrf/analysis.h"
#include "bcrf/batch.h"
#include "bcrf/boundary.h"
#include "bcrf/crf.h"
#include "bcrf/featurizer.h"
#include "bcrf/io.h"
#include "bcrf/metrics.h"
#include "bcrf/synthetic.h"
#include "bcrf/trainer.h"
#include "json.hpp"
#include "oracle.h"

namespace bcrf {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fmt(const char* fmt, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c, d);
  return buf;
}

Outcome CrfOracle() {
  const auto t0 = Clock::now();
  Rng rng(20260101);
  double worst = 0;
  int path_mismatch = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng.Below(12);
    const auto em = testing::RandomEmissions(rng, n, 3.0);
    const auto p = testing::RandomParams(rng, 2.0);
    const auto bf = testing::EnumeratePaths(em, p);
    worst = std::max(worst, std::abs(LogPartition(em, p) - bf.log_z));
    const auto v = Viterbi(em, p);
    worst = std::max(worst, std::abs(v.score - bf.best_score));
    if (v.labels != testing::ToLabels(bf.best_path)) ++path_mismatch;
    const auto m = Marginals(em, p);
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t y = 0; y < 2; ++y) {
        worst = std::max(worst, std::abs(m.probs[t][y] - bf.marginals[t][y]));
      }
    }
  }
  const double secs = Seconds(t0);
  return {worst <= 1e-8 && path_mismatch == 0 && secs < 60.0,
          Fmt("max abs err %.3g, viterbi path mismatches %.0f, %.2f s", worst,
              path_mismatch, secs)};
}

Outcome Gradients() {
  const auto t0 = Clock::now();
  Rng rng(20260102);
  constexpr double kH = 1e-5;
  double worst = 0;
  // 50 instances differentiate w.r.t. emissions and CRF parameters; 50 go
  // through featurizer -> linear emitter -> CRF.
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.Below(10);
    auto em = testing::RandomEmissions(rng, n, 2.0);
    auto p = testing::RandomParams(rng, 1.5);
    LabelSequence gold(n);
    for (auto& y : gold) y = rng.Bernoulli(0.5) ? Label::kMachine : Label::kHuman;
    const auto g = NllGrad(em, p, gold);
    auto check = [&](double& x, double analytic) {
      const double x0 = x;
      const double fd = testing::CentralDifference(
          [&](double v) {
            x = v;
            const double out = NllGrad(em, p, gold).nll;
            x = x0;
            return out;
          },
          x0, kH);
      worst = std::max(worst, testing::RelativeError(analytic, fd));
    };
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t k = 0; k < 2; ++k) check(em.scores[t][k], g.d_emissions[t][k]);
    }
    for (std::size_t i = 0; i < 2; ++i) {
      check(p.start[i], g.d_params.start[i]);
      check(p.end[i], g.d_params.end[i]);
      for (std::size_t j = 0; j < 2; ++j) {
        check(p.transition[i][j], g.d_params.transition[i][j]);
      }
    }
  }
  const auto vocab = MakeSyntheticVocabulary(30, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.Below(8);
    const std::size_t b = rng.Below(n + 1);
    WordSequence words;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& side = i < b ? vocab.human : vocab.machine;
      words.push_back(side[rng.Below(side.size())]);
    }
    auto w = EmitterWeights::Zeros(128, rng.Next());
    for (auto& row : w.weights) row = {rng.Uniform() - 0.5, rng.Uniform() - 0.5};
    const auto crf = testing::RandomParams(rng, 1.0);
    const auto gold = LabelsFromBoundary(b, n);
    const auto feats = FeaturizeAll(words, w.hash_seed, w.dim);
    const auto grad =
        AccumulateWeightGrad(NllGrad(EmissionScores(feats, w), crf, gold).d_emissions, feats);
    for (const auto& [i, analytic] : grad) {
      for (std::size_t y = 0; y < 2; ++y) {
        const double x0 = w.weights[i][y];
        const double fd = testing::CentralDifference(
            [&](double v) {
              w.weights[i][y] = v;
              const double out = NllGrad(EmissionScores(feats, w), crf, gold).nll;
              w.weights[i][y] = x0;
              return out;
            },
            x0, kH);
        worst = std::max(worst, testing::RelativeError(analytic[y], fd));
      }
    }
  }
  const double secs = Seconds(t0);
  return {worst < 1e-4 && secs < 60.0,
          Fmt("100 instances, max rel err %.3g, %.2f s", worst, secs)};
}

Outcome Decoders() {
  std::size_t sequences = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const auto y = testing::PathFromMask(m, n);
      const auto labels = testing::ToLabels(y);
      ++sequences;
      if (DecodeFirstChange(labels) != testing::OracleFirstChange(y)) ++mismatches;
      if (DecodeConfirmedChange(labels) != testing::OracleConfirmedChange(y)) ++mismatches;
    }
  }
  std::size_t round_trip_fail = 0;
  for (std::size_t n = 1; n <= 20; ++n) {
    for (std::size_t b = 0; b <= n; ++b) {
      const auto labels = LabelsFromBoundary(b, n);
      if (DecodeFirstChange(labels) != b || DecodeConfirmedChange(labels) != b) {
        ++round_trip_fail;
      }
    }
  }
  return {sequences == 8190 && mismatches == 0 && round_trip_fail == 0,
          Fmt("%.0f sequences, %.0f mismatches, %.0f round-trip failures",
              static_cast<double>(sequences), static_cast<double>(mismatches),
              static_cast<double>(round_trip_fail))};
}

Outcome MetricFixtures() {
  const std::string dir = BCRF_TEST_DATA;
  const auto records = LoadDataset(dir + "/metrics_records.jsonl");
  const auto preds = LoadPredictions(dir + "/metrics_predictions.jsonl");
  const auto expected = nlohmann::json::parse(ReadFile(dir + "/metrics_expected.json"));
  const auto r = Evaluate(records, preds);
  auto ratio = [&](const char* key) {
    return expected.at(std::string(key) + "_num").get<double>() /
           expected.at(std::string(key) + "_den").get<double>();
  };
  double worst = 0;
  auto cmp = [&](double got, double want) { worst = std::max(worst, std::abs(got - want)); };
  cmp(r.mae, ratio("mae"));
  cmp(r.mare, ratio("mare"));
  cmp(r.overall_sentence_accuracy, ratio("overall"));
  cmp(r.average_sentence_accuracy, ratio("average"));
  bool ok = r.records == expected.at("records").get<std::size_t>() &&
            r.placement.mid_sentence && r.placement.end_of_sentence &&
            r.placement.mid_sentence_records ==
                expected.at("mid_sentence_records").get<std::size_t>() &&
            r.placement.end_of_sentence_records ==
                expected.at("end_of_sentence_records").get<std::size_t>();
  if (ok) {
    cmp(*r.placement.mid_sentence, ratio("mid_sentence"));
    cmp(*r.placement.end_of_sentence, ratio("end_of_sentence"));
  }
  for (const auto& d : r.details) {
    const auto& want = expected.at("sentences").at(d.id);
    ok = ok && d.sentences.included == want[0].get<std::size_t>() &&
         d.sentences.correct == want[1].get<std::size_t>();
  }
  return {ok && worst <= 1e-12, Fmt("10 records, max abs err %.3g", worst)};
}

struct SyntheticSetup {
  std::vector<TextRecord> train;
  std::vector<TextRecord> heldout;
};

SyntheticSetup MakeSynthetic(std::size_t train_records, std::size_t heldout_records) {
  const auto vocab = MakeSyntheticVocabulary(400, 2026);
  SyntheticCorpusConfig c;
  c.records = train_records;
  c.seed = 101;
  c.id_prefix = "train";
  SyntheticSetup s;
  s.train = MakeSyntheticCorpus(vocab, c);
  c.records = heldout_records;
  c.seed = 202;
  c.id_prefix = "heldout";
  s.heldout = MakeSyntheticCorpus(vocab, c);
  return s;
}

double HeldOutMae(const std::vector<TextRecord>& recs,
                  const std::vector<std::size_t>& predicted) {
  std::vector<BoundaryPair> pairs;
  for (std::size_t i = 0; i < recs.size(); ++i) pairs.push_back({predicted[i], *recs[i].label});
  return Mae(pairs);
}

Outcome SyntheticEndToEnd() {
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto s = MakeSynthetic(1000, 200);
  const auto t0 = Clock::now();
  TrainReport report;
  const Model model = Train(s.train, TrainConfig{}, &report);
  const double train_secs = Seconds(t0);

  std::vector<BoundaryPrediction> preds;
  std::vector<std::size_t> b2;
  for (const auto& r : s.heldout) {
    b2.push_back(Predict(model, r.text, Approach::kConfirmedChange).boundary);
    preds.push_back({r.id, b2.back()});
  }
  const auto eval = Evaluate(s.heldout, preds);

  // Noisy-emission variant: built-in emissions plus N(0, 1) per score.
  Rng noise(77);
  std::vector<std::size_t> n1, n2;
  for (const auto& r : s.heldout) {
    const auto words = SplitWords(r.text);
    EmissionMatrix em = BuiltinEmissions(model, words);
    for (auto& row : em.scores) {
      row[0] += noise.Normal();
      row[1] += noise.Normal();
    }
    n1.push_back(PredictWords(model, words, Approach::kFirstChange, &em).boundary);
    n2.push_back(PredictWords(model, words, Approach::kConfirmedChange, &em).boundary);
  }
  const double mae1 = HeldOutMae(s.heldout, n1);
  const double mae2 = HeldOutMae(s.heldout, n2);
  omp_set_num_threads(threads);

  const bool ok = train_secs < 300.0 && eval.mae <= 2.0 &&
                  eval.overall_sentence_accuracy >= 0.95 && mae2 <= mae1;
  return {ok, Fmt("train %.1f s, held-out MAE %.4f, approach-2 overall acc %.4f", train_secs,
                  eval.mae, eval.overall_sentence_accuracy) +
                  Fmt(", noisy MAE approach 1 %.4f vs approach 2 %.4f", mae1, mae2)};
}

Outcome Determinism() {
  const auto s = MakeSynthetic(200, 50);
  TrainConfig c;
  c.epochs = 5;
  c.seed = 31;
  const fs::path dir = fs::temp_directory_path() / "bcrf_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string models[2], predictions[2];
  for (int run = 0; run < 2; ++run) {
    const auto model_path = dir / ("model" + std::to_string(run) + ".bin");
    const auto pred_path = dir / ("pred" + std::to_string(run) + ".jsonl");
    SaveModel(model_path, Train(s.train, c));
    const Model loaded = LoadModel(model_path);
    const auto out = PredictBatch(loaded, s.heldout, Approach::kConfirmedChange);
    std::vector<BoundaryPrediction> preds;
    for (std::size_t i = 0; i < out.size(); ++i) preds.push_back({s.heldout[i].id, out[i].boundary});
    WriteFile(pred_path, SerializePredictions(preds));
    models[run] = ReadFile(model_path);
    predictions[run] = ReadFile(pred_path);
  }
  fs::remove_all(dir);
  const bool ok = models[0] == models[1] && predictions[0] == predictions[1];
  return {ok, Fmt("model %.0f bytes, predictions %.0f bytes, identical across 2 runs",
                  static_cast<double>(models[0].size()),
                  static_cast<double>(predictions[0].size()))};
}

Outcome AnalysisConservation() {
  Rng rng(20260107);
  std::vector<PosPairObservation> pairs;
  std::vector<LocationRecord> locations;
  std::size_t bad_shares = 0, portions = 0;
  const std::vector<std::string> pool = {"the", "quickly", "ran", "42", ",", "model",
                                         "beautiful", "and", "she", "walked", "of", "to"};
  for (int i = 0; i < 1000; ++i) {
    WordSequence words(1 + rng.Below(60));
    for (auto& w : words) w = pool[rng.Below(pool.size())];
    const std::size_t b = rng.Below(words.size() + 1);
    const auto tags = PosTagWords(words);
    pairs.push_back({BoundaryPosPair(words, tags, b), static_cast<double>(rng.Below(40))});
    locations.push_back({b, words.size()});
    const auto d = PosDistributionAt(words, tags, b);
    for (const auto& side : {d.human, d.machine}) {
      if (!side) continue;
      ++portions;
      const double sum = std::accumulate(side->share.begin(), side->share.end(), 0.0);
      if (std::abs(sum - 1.0) > 1e-12) ++bad_shares;
    }
  }
  std::size_t pair_total = 0;
  for (const auto& row : PosPairTable(pairs)) pair_total += row.count;
  const auto hist = BoundaryLocationHistogram(locations, 10);
  const std::size_t hist_total = std::accumulate(hist.begin(), hist.end(), std::size_t{0});
  const bool ok = pair_total == 1000 && hist_total == 1000 && bad_shares == 0;
  return {ok, Fmt("pair total %.0f, histogram total %.0f, %.0f of %.0f portions off by > 1e-12",
                  static_cast<double>(pair_total), static_cast<double>(hist_total),
                  static_cast<double>(bad_shares), static_cast<double>(portions))};
}

}  // namespace
}  // namespace bcrf

int main() {
  using bcrf::Outcome;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"crf_oracle_equivalence", bcrf::CrfOracle},
      {"gradient_correctness", bcrf::Gradients},
      {"decoder_exhaustive_equivalence", bcrf::Decoders},
      {"metric_fixtures", bcrf::MetricFixtures},
      {"synthetic_end_to_end", bcrf::SyntheticEndToEnd},
      {"determinism", bcrf::Determinism},
      {"analysis_conservation", bcrf::AnalysisConservation},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
