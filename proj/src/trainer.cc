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

#include "bcrf/trainer.h"

#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "bcrf/adam.h"
#include "bcrf/batch.h"
#include "bcrf/error.h"

namespace bcrf {
namespace {

constexpr std::uint64_t kMaxHashDim = std::uint64_t{1} << 28;

using FlatCrf = std::array<double, 8>;

FlatCrf Flatten(const CrfParams& p) {
  return {p.start[0],         p.start[1],         p.transition[0][0],
          p.transition[0][1], p.transition[1][0], p.transition[1][1],
          p.end[0],           p.end[1]};
}

CrfParams Unflatten(const FlatCrf& f) {
  CrfParams p;
  p.start = {f[0], f[1]};
  p.transition[0] = {f[2], f[3]};
  p.transition[1] = {f[4], f[5]};
  p.end = {f[6], f[7]};
  return p;
}

std::string RecordName(const TextRecord& r, std::size_t i) {
  return "record " + std::to_string(i) + (r.id.empty() ? "" : " (" + r.id + ")");
}

}  // namespace

void ValidateConfig(const TrainConfig& c) {
  if (!(c.learning_rate > 0.0) || !std::isfinite(c.learning_rate)) {
    throw ValidationError("learning_rate must be positive");
  }
  if (!(c.lr_multiplier > 0.0) || !std::isfinite(c.lr_multiplier)) {
    throw ValidationError("lr_multiplier must be positive");
  }
  if (!(c.weight_decay >= 0.0) || !std::isfinite(c.weight_decay)) {
    throw ValidationError("weight_decay must be non-negative");
  }
  if (!(c.dropout_rate >= 0.0 && c.dropout_rate < 1.0)) {
    throw ValidationError("dropout_rate must be in [0, 1)");
  }
  if (c.epochs < 1) throw ValidationError("epochs must be at least 1");
  if (c.optimizer != Optimizer::kAdam) {
    throw ValidationError("unsupported optimizer");
  }
  if (!std::has_single_bit(c.hash_dim) || c.hash_dim > kMaxHashDim) {
    throw ValidationError("hash_dim must be a power of two no larger than 2^28");
  }
}

FeatureVector ApplyFeatureDropout(const FeatureVector& features, double rate,
                                  Rng& rng) {
  if (!(rate >= 0.0 && rate < 1.0)) {
    throw ValidationError("dropout rate must be in [0, 1)");
  }
  if (rate == 0.0) return features;
  FeatureVector out{{}, features.dim};
  out.indices.reserve(features.indices.size());
  for (std::uint32_t i : features.indices) {
    if (!rng.Bernoulli(rate)) out.indices.push_back(i);
  }
  return out;
}

Model Train(std::span<const TextRecord> dataset, const TrainConfig& config,
            TrainReport* report) {
  ValidateConfig(config);
  TrainReport local;
  TrainReport& rep = report ? *report : local;
  rep = TrainReport{};

  const std::size_t dim = config.hash_dim;
  std::vector<TrainingExample> examples;
  examples.reserve(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const TextRecord& r = dataset[i];
    if (!r.label) {
      rep.warnings.push_back(RecordName(r, i) + ": missing label, skipped");
      continue;
    }
    WordSequence words;
    try {
      words = SplitWords(r.text);
    } catch (const ValidationError& e) {
      rep.warnings.push_back(RecordName(r, i) + ": " + e.what() + ", skipped");
      continue;
    }
    if (*r.label > words.size()) {
      rep.warnings.push_back(RecordName(r, i) + ": label " +
                             std::to_string(*r.label) + " exceeds " +
                             std::to_string(words.size()) + " words, skipped");
      continue;
    }
    TrainingExample ex;
    ex.features = FeaturizeAll(words, config.hash_seed, dim, config.max_tokens);
    ex.gold = LabelsFromBoundary(*r.label, words.size());
    ex.gold.resize(ex.features.size());
    examples.push_back(std::move(ex));
  }
  if (examples.empty()) {
    throw ValidationError("no valid training records");
  }
  rep.records_used = examples.size();

  Model model{EmitterWeights::Zeros(dim, config.hash_seed), CrfParams{}, config};
  AdamState crf_state = AdamState::Zeros(8);
  std::vector<LabelScores> first_moment(dim), second_moment(dim), grad(dim);
  std::vector<std::uint8_t> seen(dim, 0);
  std::vector<std::uint32_t> active;

  const AdamHyper hyper{config.EffectiveLearningRate(), config.weight_decay};
  Rng rng(config.seed);
  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  rep.epoch_mean_nll.push_back(OrderedMean(NllPerExample(model, examples)));

  std::vector<FeatureVector> dropped;
  for (std::uint32_t epoch = 0; epoch < config.epochs; ++epoch) {
    rng.Shuffle(std::span<std::size_t>(order));
    for (std::size_t idx : order) {
      const TrainingExample& ex = examples[idx];
      std::span<const FeatureVector> feats = ex.features;
      if (config.dropout_rate > 0.0) {
        dropped.clear();
        for (const auto& f : ex.features) {
          dropped.push_back(ApplyFeatureDropout(f, config.dropout_rate, rng));
        }
        feats = dropped;
      }

      const EmissionMatrix em = EmissionScores(feats, model.emitter);
      const NllGradient g = NllGrad(em, model.crf, ex.gold);
      const WeightGradient wgrad = AccumulateWeightGrad(g.d_emissions, feats);
      for (const auto& [i, d] : wgrad) {
        if (!seen[i]) {
          seen[i] = 1;
          active.push_back(i);
        }
        grad[i] = d;
      }

      FlatCrf params = Flatten(model.crf);
      const FlatCrf crf_grad = Flatten(g.d_params);
      AdamStep(params, crf_grad, crf_state, hyper.learning_rate,
               hyper.weight_decay);
      model.crf = Unflatten(params);

      AdamUpdateRows(model.emitter.weights, grad, first_moment, second_moment,
                     active, crf_state.step, hyper);
      for (const auto& entry : wgrad) grad[entry.first] = LabelScores{};
    }
    rep.epoch_mean_nll.push_back(OrderedMean(NllPerExample(model, examples)));
  }
  return model;
}

EmissionMatrix BuiltinEmissions(const Model& model,
                                std::span<const std::string> words) {
  const auto features = FeaturizeAll(words, model.emitter.hash_seed,
                                     model.emitter.dim, model.config.max_tokens);
  return EmissionScores(features, model.emitter);
}

PredictOutput PredictWords(const Model& model,
                           std::span<const std::string> words,
                           Approach approach,
                           const EmissionMatrix* external_emissions) {
  if (words.empty()) throw ValidationError("text has no words");
  EmissionMatrix builtin;
  if (!external_emissions) builtin = BuiltinEmissions(model, words);
  const EmissionMatrix& em = external_emissions ? *external_emissions : builtin;

  const ViterbiResult path = Viterbi(em, model.crf);
  PredictOutput out;
  out.word_count = words.size();
  out.word_labels = WordLabelsFromTokens(path.labels, em.word_index, words.size());
  out.boundary = DecodeBoundary(out.word_labels, approach);
  return out;
}

PredictOutput Predict(const Model& model, std::string_view text,
                      Approach approach,
                      const EmissionMatrix* external_emissions) {
  const WordSequence words = SplitWords(text);
  return PredictWords(model, words, approach, external_emissions);
}

}  // namespace bcrf
