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

// Error analysis: a coarse rule-based POS tagger, POS pairs around the gold
// boundary, POS usage on each side of it, and boundary-location histograms.

#ifndef BCRF_ANALYSIS_H_
#define BCRF_ANALYSIS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcrf {

enum class PosTag : std::uint8_t {
  kNoun, kVerb, kAdj, kAdv, kPron, kDet, kAdp, kNum, kConj, kPrt, kPunct, kX,
  kBos, kEos,
};

inline constexpr std::size_t kNumWordTags = 12;  // excludes BOS/EOS

const char* PosTagName(PosTag tag);

// Accepts the universal tag names (any case) and common Penn Treebank tags;
// anything else maps to X.
PosTag PosTagFromString(std::string_view name);

std::vector<PosTag> PosTagWords(std::span<const std::string> words);

struct PosPair {
  PosTag pre = PosTag::kBos;
  PosTag post = PosTag::kEos;

  bool operator==(const PosPair&) const = default;
};

// (tag before the boundary, tag after it), with BOS/EOS at the extremes.
PosPair BoundaryPosPair(std::span<const std::string> words,
                        std::span<const PosTag> tags,
                        std::size_t gold_boundary);

struct PosPairObservation {
  PosPair pair;
  std::optional<double> abs_error;
};

struct PosPairRow {
  PosTag pre = PosTag::kBos;
  PosTag post = PosTag::kEos;
  std::size_t count = 0;
  // Median over observations that carry an error; absent if none do.
  std::optional<double> median_abs_error;
};

// Grouped by (pre, post) and sorted by tag order.
std::vector<PosPairRow> PosPairTable(
    std::span<const PosPairObservation> observations);

// Mean of the two middle values for even counts. Empty input is an error.
double Median(std::vector<double> values);

struct PosShares {
  std::size_t words = 0;
  std::array<double, kNumWordTags> share{};
};

struct PosDistribution {
  std::optional<PosShares> human;    // words [0, boundary)
  std::optional<PosShares> machine;  // words [boundary, word_count)
};

PosDistribution PosDistributionAt(std::span<const std::string> words,
                                  std::span<const PosTag> tags,
                                  std::size_t gold_boundary);

// Pooled counterpart over many records: raw tag counts per side.
struct PosCounts {
  std::array<std::size_t, kNumWordTags> human{};
  std::array<std::size_t, kNumWordTags> machine{};

  void Add(std::span<const PosTag> tags, std::size_t gold_boundary);
};

struct LocationRecord {
  std::size_t boundary = 0;
  std::size_t word_count = 0;
};

// Counts per equal-width bin of boundary / word_count over [0, 1]; a ratio of
// exactly 1 lands in the last bin.
std::vector<std::size_t> BoundaryLocationHistogram(
    std::span<const LocationRecord> records, std::size_t bins);

}  // namespace bcrf

#endif  // BCRF_ANALYSIS_H_
