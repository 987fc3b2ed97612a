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

// Word-level (MAE, MARE) and sentence-level boundary metrics.
//
// Sentence metrics follow two rules:
//   * a sentence that the gold boundary falls strictly inside is excluded;
//   * an included sentence is correct only if the prediction puts it wholly
//     on the same side as the gold boundary does. A sentence the predicted
//     boundary falls inside is therefore incorrect, never excluded.

#ifndef BCRF_METRICS_H_
#define BCRF_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bcrf/featurizer.h"
#include "bcrf/record.h"

namespace bcrf {

struct BoundaryPair {
  std::size_t pred = 0;
  std::size_t gold = 0;
};

struct BoundaryTriple {
  std::size_t pred = 0;
  std::size_t gold = 0;
  std::size_t word_count = 0;
};

// [start_word, end_word)
struct SentenceSpan {
  std::size_t start_word = 0;
  std::size_t end_word = 0;

  bool operator==(const SentenceSpan&) const = default;
};

struct SentenceCounts {
  std::size_t included = 0;
  std::size_t correct = 0;

  bool operator==(const SentenceCounts&) const = default;
};

enum class Placement { kEndOfSentence, kMidSentence };

const char* PlacementName(Placement p);

double Mae(std::span<const BoundaryPair> pairs);
double Mare(std::span<const BoundaryTriple> triples);

// A sentence ends at a word whose last character, ignoring trailing quotes
// and brackets, is '.', '!' or '?'. The final span always closes at the
// last word.
std::vector<SentenceSpan> SplitSentences(std::span<const std::string> words);

SentenceCounts SentenceEval(std::span<const SentenceSpan> spans,
                            std::size_t gold_boundary,
                            std::size_t pred_boundary);

struct SentenceAccuracy {
  double overall = 0.0;  // pooled correct / pooled included
  double average = 0.0;  // mean of per-record accuracy
};

// Records with nothing included are left out of the average. Throws
// ValidationError if every record has nothing included.
SentenceAccuracy AggregateSentenceMetrics(
    std::span<const SentenceCounts> per_record);

Placement PlacementSplit(std::span<const SentenceSpan> spans,
                         std::size_t gold_boundary);

struct RecordEval {
  std::string id;
  std::size_t gold = 0;
  std::size_t pred = 0;
  std::size_t word_count = 0;
  SentenceCounts sentences;
  Placement placement = Placement::kEndOfSentence;
};

struct PlacementAccuracy {
  std::optional<double> mid_sentence;
  std::optional<double> end_of_sentence;
  std::size_t mid_sentence_records = 0;
  std::size_t end_of_sentence_records = 0;
};

struct EvalResult {
  std::size_t records = 0;
  double mae = 0.0;
  double mare = 0.0;
  double overall_sentence_accuracy = 0.0;
  double average_sentence_accuracy = 0.0;
  PlacementAccuracy placement;
  std::vector<RecordEval> details;
};

// Scores predictions against labeled records, matched by id. Every record
// needs a label and a prediction; extra predictions are an error too.
EvalResult Evaluate(std::span<const TextRecord> records,
                    std::span<const BoundaryPrediction> predictions);

}  // namespace bcrf

#endif  // BCRF_METRICS_H_
