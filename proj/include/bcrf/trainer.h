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

// Joint training of the built-in emitter and the CRF, and prediction.

#ifndef BCRF_TRAINER_H_
#define BCRF_TRAINER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcrf/boundary.h"
#include "bcrf/model.h"
#include "bcrf/random.h"
#include "bcrf/record.h"

namespace bcrf {

// Drops each index independently with probability `rate`. Surviving
// features are not rescaled. rate == 0 returns the input and draws nothing.
FeatureVector ApplyFeatureDropout(const FeatureVector& features, double rate,
                                  Rng& rng);

struct TrainReport {
  // epoch_mean_nll[0] is the untrained model; entry e is after epoch e.
  // Measured over the training set without dropout.
  std::vector<double> epoch_mean_nll;
  std::vector<std::string> warnings;
  std::size_t records_used = 0;
};

// Per-record (batch size 1) Adam on the CRF negative log-likelihood, with
// parameters starting at zero and epoch order shuffled from config.seed.
// Records whose label is missing or out of range are skipped with a
// warning; throws ValidationError if nothing is left.
Model Train(std::span<const TextRecord> dataset, const TrainConfig& config,
            TrainReport* report = nullptr);

// Built-in emissions for `words`, truncated to the model's max_tokens.
EmissionMatrix BuiltinEmissions(const Model& model,
                                std::span<const std::string> words);

struct PredictOutput {
  std::size_t boundary = 0;
  std::size_t word_count = 0;
  LabelSequence word_labels;
};

// Emissions (external when given, else built-in) -> Viterbi -> word labels
// -> boundary. External emissions must align to a prefix of the words.
PredictOutput Predict(const Model& model, std::string_view text,
                      Approach approach,
                      const EmissionMatrix* external_emissions = nullptr);

PredictOutput PredictWords(const Model& model,
                           std::span<const std::string> words,
                           Approach approach,
                           const EmissionMatrix* external_emissions = nullptr);

}  // namespace bcrf

#endif  // BCRF_TRAINER_H_
