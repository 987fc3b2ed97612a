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

// Synthetic partially machine-generated corpora: the human prefix draws from
// one vocabulary, the machine suffix from a disjoint one.

#ifndef BCRF_SYNTHETIC_H_
#define BCRF_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bcrf/record.h"

namespace bcrf {

struct SyntheticVocabulary {
  std::vector<std::string> human;
  std::vector<std::string> machine;
};

// Random lowercase words; the two lists never share a word.
SyntheticVocabulary MakeSyntheticVocabulary(std::size_t words_per_side,
                                            std::uint64_t seed);

struct SyntheticCorpusConfig {
  std::size_t records = 1000;
  std::size_t min_words = 40;
  std::size_t max_words = 120;
  std::size_t min_sentence_words = 5;
  std::size_t max_sentence_words = 15;
  std::uint64_t seed = 1;
  std::string id_prefix = "syn";
};

// Boundary uniform over [0, word_count]. Sentences end in '.', '!' or '?'
// and start capitalized.
std::vector<TextRecord> MakeSyntheticCorpus(const SyntheticVocabulary& vocab,
                                            const SyntheticCorpusConfig& config);

}  // namespace bcrf

#endif  // BCRF_SYNTHETIC_H_
