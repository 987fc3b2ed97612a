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

#include "bcrf/featurizer.h"

#include <algorithm>
#include <bit>
#include <string>

#include "bcrf/error.h"
#include "bcrf/text.h"

namespace bcrf {
namespace {

constexpr char kSep = '\x1f';

std::uint64_t Mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

class FeatureSink {
 public:
  FeatureSink(std::uint64_t seed, std::size_t dim) : seed_(seed), dim_(dim) {}

  void Add(std::string_view tmpl, std::string_view value) {
    key_.assign(tmpl);
    key_.push_back(kSep);
    key_.append(value);
    out_.push_back(
        static_cast<std::uint32_t>(HashFeature(key_, seed_) & (dim_ - 1)));
  }

  FeatureVector Finish() && {
    std::sort(out_.begin(), out_.end());
    out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
    return FeatureVector{std::move(out_), dim_};
  }

 private:
  std::uint64_t seed_;
  std::size_t dim_;
  std::string key_;
  std::vector<std::uint32_t> out_;
};

void CheckDim(std::size_t dim) {
  if (dim == 0 || !std::has_single_bit(dim) ||
      dim > (std::size_t{1} << 32)) {
    throw ValidationError("hash dimension must be a power of two in [1, 2^32], got " +
                          std::to_string(dim));
  }
}

}  // namespace

EmitterWeights EmitterWeights::Zeros(std::size_t dim, std::uint64_t hash_seed) {
  CheckDim(dim);
  EmitterWeights w;
  w.weights.assign(dim, LabelScores{});
  w.hash_seed = hash_seed;
  w.dim = dim;
  return w;
}

WordSequence SplitWords(std::string_view input) {
  WordSequence words;
  std::size_t start = 0;
  bool in_word = false;
  std::size_t offset = 0;
  for (const auto& cp : text::Decode(input)) {
    if (text::IsWhitespace(cp.value)) {
      if (in_word) words.emplace_back(input.substr(start, offset - start));
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      start = offset;
    }
    offset += cp.bytes.size();
  }
  if (in_word) words.emplace_back(input.substr(start));
  if (words.empty()) throw ValidationError("text is empty or whitespace-only");
  return words;
}

std::uint64_t HashFeature(std::string_view key, std::uint64_t seed) {
  // FNV-1a over the key, seeded, then finalized so low bits are well mixed.
  std::uint64_t h = 0xcbf29ce484222325ULL ^ Mix64(seed);
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Mix64(h);
}

FeatureVector Featurize(std::span<const std::string> words,
                        std::size_t position, std::uint64_t seed,
                        std::size_t dim) {
  CheckDim(dim);
  if (position >= words.size()) {
    throw ValidationError("feature position " + std::to_string(position) +
                          " out of range for " + std::to_string(words.size()) +
                          " words");
  }
  FeatureSink sink(seed, dim);
  const std::string& word = words[position];
  const std::string lower = text::AsciiLower(word);

  sink.Add("w", word);
  sink.Add("lw", lower);

  const auto cps = text::Decode(lower);
  for (std::size_t n = 2; n <= 4; ++n) {
    if (cps.size() < n) break;
    for (std::size_t i = 0; i + n <= cps.size(); ++i) {
      const char* begin = cps[i].bytes.data();
      const char* end = cps[i + n - 1].bytes.data() + cps[i + n - 1].bytes.size();
      sink.Add("ng" + std::to_string(n),
               std::string_view(begin, static_cast<std::size_t>(end - begin)));
    }
  }

  sink.Add("pw", position == 0 ? std::string("<BOS>")
                               : text::AsciiLower(words[position - 1]));
  sink.Add("nw", position + 1 == words.size()
                     ? std::string("<EOS>")
                     : text::AsciiLower(words[position + 1]));
  sink.Add("pos", std::to_string(10 * position / words.size()));

  bool any_letter = false, all_upper = true, digit = false, punct = false;
  for (const auto& cp : text::Decode(word)) {
    const char32_t c = cp.value;
    if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) {
      any_letter = true;
      if (c >= U'a') all_upper = false;
    }
    digit = digit || (c >= U'0' && c <= U'9');
    punct = punct || text::IsPunctuation(c);
  }
  if (word[0] >= 'A' && word[0] <= 'Z') sink.Add("shape", "init_cap");
  if (any_letter && all_upper) sink.Add("shape", "all_caps");
  if (digit) sink.Add("shape", "digit");
  if (punct) sink.Add("shape", "punct");

  return std::move(sink).Finish();
}

std::vector<FeatureVector> FeaturizeAll(std::span<const std::string> words,
                                        std::uint64_t seed, std::size_t dim,
                                        std::size_t limit) {
  const std::size_t n =
      limit == 0 ? words.size() : std::min(words.size(), limit);
  std::vector<FeatureVector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(Featurize(words, i, seed, dim));
  }
  return out;
}

EmissionMatrix EmissionScores(std::span<const FeatureVector> features,
                              const EmitterWeights& weights) {
  std::vector<LabelScores> scores(features.size());
  for (std::size_t t = 0; t < features.size(); ++t) {
    if (features[t].dim != weights.dim) {
      throw ValidationError("feature dimension does not match emitter weights");
    }
    for (std::uint32_t i : features[t].indices) {
      scores[t][0] += weights.weights[i][0];
      scores[t][1] += weights.weights[i][1];
    }
  }
  return EmissionMatrix::OnePerWord(std::move(scores));
}

EmissionMatrix EmissionScores(std::span<const std::string> words,
                              const EmitterWeights& weights) {
  const auto features = FeaturizeAll(words, weights.hash_seed, weights.dim);
  return EmissionScores(features, weights);
}

WeightGradient AccumulateWeightGrad(std::span<const LabelScores> d_emissions,
                                    std::span<const FeatureVector> features) {
  if (d_emissions.size() != features.size()) {
    throw ValidationError("gradient has " + std::to_string(d_emissions.size()) +
                          " rows but there are " +
                          std::to_string(features.size()) + " feature sets");
  }
  std::vector<std::pair<std::uint32_t, LabelScores>> flat;
  for (std::size_t t = 0; t < features.size(); ++t) {
    for (std::uint32_t i : features[t].indices) {
      flat.push_back({i, d_emissions[t]});
    }
  }
  // Stable so the per-index sum runs in position order.
  std::stable_sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) {
    return a.first < b.first;
  });
  WeightGradient grad;
  for (const auto& [i, d] : flat) {
    if (!grad.empty() && grad.back().first == i) {
      grad.back().second[0] += d[0];
      grad.back().second[1] += d[1];
    } else {
      grad.push_back({i, d});
    }
  }
  return grad;
}

}  // namespace bcrf
