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

// Built-in emitter: a hashed sparse linear model producing one emission row
// per whitespace word. Transformer emitters plug in through external
// emission files instead (see io.h).

#ifndef BCRF_FEATURIZER_H_
#define BCRF_FEATURIZER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcrf/crf.h"

namespace bcrf {

using WordSequence = std::vector<std::string>;

inline constexpr std::size_t kDefaultHashDim = std::size_t{1} << 18;
inline constexpr std::uint64_t kDefaultHashSeed = 0x9e3779b97f4a7c15ULL;

// Sorted, duplicate-free hashed feature indices for one position.
struct FeatureVector {
  std::vector<std::uint32_t> indices;
  std::size_t dim = 0;

  bool operator==(const FeatureVector&) const = default;
};

struct EmitterWeights {
  std::vector<LabelScores> weights;  // dim rows
  std::uint64_t hash_seed = kDefaultHashSeed;
  std::size_t dim = 0;

  // Zero weights; dim must be a power of two.
  static EmitterWeights Zeros(std::size_t dim, std::uint64_t hash_seed);
};

// Sparse gradient over EmitterWeights, sorted by index.
using WeightGradient = std::vector<std::pair<std::uint32_t, LabelScores>>;

// Splits on Unicode whitespace. Throws ValidationError on blank text.
WordSequence SplitWords(std::string_view text);

std::uint64_t HashFeature(std::string_view key, std::uint64_t seed);

// Feature templates: word identity, lowercased identity, character 2..4-grams
// of the lowercased word, previous/next lowercased word (BOS/EOS at the
// edges), position decile, and shape flags.
FeatureVector Featurize(std::span<const std::string> words,
                        std::size_t position, std::uint64_t seed,
                        std::size_t dim);

// Featurizes the first `limit` positions (all when limit is 0).
std::vector<FeatureVector> FeaturizeAll(std::span<const std::string> words,
                                        std::uint64_t seed, std::size_t dim,
                                        std::size_t limit = 0);

EmissionMatrix EmissionScores(std::span<const FeatureVector> features,
                              const EmitterWeights& weights);

EmissionMatrix EmissionScores(std::span<const std::string> words,
                              const EmitterWeights& weights);

WeightGradient AccumulateWeightGrad(std::span<const LabelScores> d_emissions,
                                    std::span<const FeatureVector> features);

}  // namespace bcrf

#endif  // BCRF_FEATURIZER_H_
