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

#include "bcrf/metrics.h"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "bcrf/error.h"
#include "bcrf/text.h"

namespace bcrf {
namespace {

std::size_t AbsDiff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

// Sums after sorting so the result does not depend on input order.
double SortedSum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

enum class Side { kHuman, kMachine, kStraddled };

Side SideOf(const SentenceSpan& s, std::size_t boundary) {
  if (s.end_word <= boundary) return Side::kHuman;
  if (s.start_word >= boundary) return Side::kMachine;
  return Side::kStraddled;
}

bool EndsSentence(const std::string& word) {
  const auto cps = text::Decode(word);
  for (auto it = cps.rbegin(); it != cps.rend(); ++it) {
    if (text::IsQuoteOrBracket(it->value)) continue;
    return it->value == U'.' || it->value == U'!' || it->value == U'?';
  }
  return false;
}

}  // namespace

const char* PlacementName(Placement p) {
  return p == Placement::kEndOfSentence ? "end_of_sentence" : "mid_sentence";
}

double Mae(std::span<const BoundaryPair> pairs) {
  if (pairs.empty()) throw ValidationError("MAE of an empty list");
  std::uint64_t total = 0;
  for (const auto& p : pairs) total += AbsDiff(p.pred, p.gold);
  return static_cast<double>(total) / static_cast<double>(pairs.size());
}

double Mare(std::span<const BoundaryTriple> triples) {
  if (triples.empty()) throw ValidationError("MARE of an empty list");
  std::vector<double> ratios;
  ratios.reserve(triples.size());
  for (const auto& t : triples) {
    if (t.word_count == 0) throw ValidationError("MARE with zero word count");
    ratios.push_back(static_cast<double>(AbsDiff(t.pred, t.gold)) /
                     static_cast<double>(t.word_count));
  }
  return SortedSum(std::move(ratios)) / static_cast<double>(triples.size());
}

std::vector<SentenceSpan> SplitSentences(std::span<const std::string> words) {
  std::vector<SentenceSpan> spans;
  std::size_t start = 0;
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (EndsSentence(words[w]) || w + 1 == words.size()) {
      spans.push_back({start, w + 1});
      start = w + 1;
    }
  }
  return spans;
}

SentenceCounts SentenceEval(std::span<const SentenceSpan> spans,
                            std::size_t gold_boundary,
                            std::size_t pred_boundary) {
  SentenceCounts c;
  for (const auto& s : spans) {
    const Side gold = SideOf(s, gold_boundary);
    if (gold == Side::kStraddled) continue;
    ++c.included;
    if (SideOf(s, pred_boundary) == gold) ++c.correct;
  }
  return c;
}

SentenceAccuracy AggregateSentenceMetrics(
    std::span<const SentenceCounts> per_record) {
  std::uint64_t included = 0;
  std::uint64_t correct = 0;
  std::vector<double> per_text;
  for (const auto& c : per_record) {
    if (c.included == 0) continue;
    included += c.included;
    correct += c.correct;
    per_text.push_back(static_cast<double>(c.correct) /
                       static_cast<double>(c.included));
  }
  if (included == 0) {
    throw ValidationError("no sentences left after excluding gold-straddled ones");
  }
  SentenceAccuracy acc;
  acc.overall = static_cast<double>(correct) / static_cast<double>(included);
  const double n = static_cast<double>(per_text.size());
  acc.average = SortedSum(std::move(per_text)) / n;
  return acc;
}

Placement PlacementSplit(std::span<const SentenceSpan> spans,
                         std::size_t gold_boundary) {
  if (!spans.empty() && gold_boundary == spans.back().end_word) {
    return Placement::kEndOfSentence;
  }
  for (const auto& s : spans) {
    if (s.start_word == gold_boundary) return Placement::kEndOfSentence;
  }
  return Placement::kMidSentence;
}

EvalResult Evaluate(std::span<const TextRecord> records,
                    std::span<const BoundaryPrediction> predictions) {
  if (records.empty()) throw ValidationError("no records to evaluate");
  std::unordered_map<std::string, std::size_t> by_id;
  for (const auto& p : predictions) {
    if (!by_id.emplace(p.id, p.boundary).second) {
      throw ValidationError("duplicate prediction for id '" + p.id + "'");
    }
  }
  if (by_id.size() != records.size()) {
    throw ValidationError("have " + std::to_string(by_id.size()) +
                          " predictions for " + std::to_string(records.size()) +
                          " records");
  }

  EvalResult result;
  result.records = records.size();
  std::vector<BoundaryPair> pairs;
  std::vector<BoundaryTriple> triples;
  std::vector<SentenceCounts> counts;
  SentenceCounts mid, end;
  for (const auto& r : records) {
    const auto it = by_id.find(r.id);
    if (it == by_id.end()) {
      throw ValidationError("no prediction for id '" + r.id + "'");
    }
    if (!r.label) throw ValidationError("record '" + r.id + "' has no label");
    const WordSequence words = SplitWords(r.text);
    const std::size_t n = words.size();
    if (*r.label > n || it->second > n) {
      throw ValidationError("boundary out of range for record '" + r.id + "'");
    }
    const auto spans = SplitSentences(words);

    RecordEval row;
    row.id = r.id;
    row.gold = *r.label;
    row.pred = it->second;
    row.word_count = n;
    row.sentences = SentenceEval(spans, row.gold, row.pred);
    row.placement = PlacementSplit(spans, row.gold);

    SentenceCounts& bucket = row.placement == Placement::kMidSentence ? mid : end;
    bucket.included += row.sentences.included;
    bucket.correct += row.sentences.correct;
    ++(row.placement == Placement::kMidSentence
           ? result.placement.mid_sentence_records
           : result.placement.end_of_sentence_records);

    pairs.push_back({row.pred, row.gold});
    triples.push_back({row.pred, row.gold, n});
    counts.push_back(row.sentences);
    result.details.push_back(std::move(row));
  }

  result.mae = Mae(pairs);
  result.mare = Mare(triples);
  const SentenceAccuracy acc = AggregateSentenceMetrics(counts);
  result.overall_sentence_accuracy = acc.overall;
  result.average_sentence_accuracy = acc.average;
  auto ratio = [](const SentenceCounts& c) -> std::optional<double> {
    if (c.included == 0) return std::nullopt;
    return static_cast<double>(c.correct) / static_cast<double>(c.included);
  };
  result.placement.mid_sentence = ratio(mid);
  result.placement.end_of_sentence = ratio(end);
  return result;
}

}  // namespace bcrf
