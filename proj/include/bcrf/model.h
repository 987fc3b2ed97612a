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

#ifndef BCRF_MODEL_H_
#define BCRF_MODEL_H_

#include <cstddef>
#include <cstdint>

#include "bcrf/crf.h"
#include "bcrf/featurizer.h"

namespace bcrf {

enum class Optimizer : std::uint32_t { kAdam = 0 };

struct TrainConfig {
  // Reference fine-tuning value. The effective step size is
  // learning_rate * lr_multiplier; the default multiplier is large because the
  // built-in linear emitter trains from zero rather than from a pretrained
  // encoder.
  double learning_rate = 2e-5;
  double lr_multiplier = 1000.0;
  double weight_decay = 1e-2;
  double dropout_rate = 75e-4;
  std::uint32_t epochs = 30;
  Optimizer optimizer = Optimizer::kAdam;
  std::uint64_t seed = 0;
  std::uint32_t max_tokens = 512;  // 0 = unlimited
  std::uint64_t hash_dim = kDefaultHashDim;
  std::uint64_t hash_seed = kDefaultHashSeed;

  double EffectiveLearningRate() const { return learning_rate * lr_multiplier; }

  bool operator==(const TrainConfig&) const = default;
};

// Throws ValidationError when a field is out of range.
void ValidateConfig(const TrainConfig& config);

inline constexpr std::uint32_t kModelFormatVersion = 1;

struct Model {
  EmitterWeights emitter;
  CrfParams crf;
  TrainConfig config;
};

}  // namespace bcrf

#endif  // BCRF_MODEL_H_
