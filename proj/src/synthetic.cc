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

#include "bcrf/synthetic.h"

#include <unordered_set>

#include "bcrf/error.h"
#include "bcrf/random.h"

namespace bcrf {

SyntheticVocabulary MakeSyntheticVocabulary(std::size_t words_per_side,
                                            std::uint64_t seed) {
  Rng rng(seed);
  std::unordered_set<std::string> used;
  auto draw = [&] {
    for (;;) {
      const auto len = static_cast<std::size_t>(rng.Between(3, 9));
      std::string w;
      for (std::size_t i = 0; i < len; ++i) {
        w.push_back(static_cast<char>('a' + rng.Below(26)));
      }
      if (used.insert(w).second) return w;
    }
  };
  SyntheticVocabulary v;
  for (std::size_t i = 0; i < words_per_side; ++i) v.human.push_back(draw());
  for (std::size_t i = 0; i < words_per_side; ++i) v.machine.push_back(draw());
  return v;
}

std::vector<TextRecord> MakeSyntheticCorpus(const SyntheticVocabulary& vocab,
                                            const SyntheticCorpusConfig& c) {
  if (vocab.human.empty() || vocab.machine.empty() || c.min_words == 0 ||
      c.min_words > c.max_words || c.min_sentence_words == 0 ||
      c.min_sentence_words > c.max_sentence_words) {
    throw ValidationError("invalid synthetic corpus configuration");
  }
  static constexpr char kTerminators[] = {'.', '!', '?'};
  Rng rng(c.seed);
  std::vector<TextRecord> out;
  out.reserve(c.records);
  for (std::size_t r = 0; r < c.records; ++r) {
    const auto n = static_cast<std::size_t>(rng.Between(
        static_cast<std::int64_t>(c.min_words),
        static_cast<std::int64_t>(c.max_words)));
    const auto boundary =
        static_cast<std::size_t>(rng.Between(0, static_cast<std::int64_t>(n)));

    std::string text;
    std::size_t left_in_sentence = 0;
    for (std::size_t w = 0; w < n; ++w) {
      const bool starts = left_in_sentence == 0;
      if (starts) {
        left_in_sentence = static_cast<std::size_t>(
            rng.Between(static_cast<std::int64_t>(c.min_sentence_words),
                        static_cast<std::int64_t>(c.max_sentence_words)));
      }
      const auto& pool = w < boundary ? vocab.human : vocab.machine;
      std::string word = pool[rng.Below(pool.size())];
      if (starts) word[0] = static_cast<char>(word[0] - 'a' + 'A');
      if (--left_in_sentence == 0 || w + 1 == n) {
        word.push_back(kTerminators[rng.Below(3)]);
        left_in_sentence = 0;
      }
      if (w > 0) text.push_back(' ');
      text += word;
    }
    TextRecord rec;
    rec.id = c.id_prefix + "-" + std::to_string(r);
    rec.text = std::move(text);
    rec.label = boundary;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace bcrf
