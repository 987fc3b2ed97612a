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

#include "bcrf/boundary.h"

#include <string>

#include "bcrf/error.h"

namespace bcrf {
namespace {

void RequireNonEmpty(std::span<const Label> labels) {
  if (labels.empty()) throw ValidationError("label sequence is empty");
}

std::size_t NoChangeBoundary(std::span<const Label> labels) {
  return labels.front() == Label::kHuman ? labels.size() : 0;
}

}  // namespace

Approach ApproachFromInt(int value) {
  if (value == 1) return Approach::kFirstChange;
  if (value == 2) return Approach::kConfirmedChange;
  throw ValidationError("approach must be 1 or 2, got " + std::to_string(value));
}

LabelSequence LabelsFromBoundary(std::size_t boundary, std::size_t word_count) {
  if (boundary > word_count) {
    throw ValidationError("boundary " + std::to_string(boundary) +
                          " exceeds word count " + std::to_string(word_count));
  }
  LabelSequence labels(word_count, Label::kHuman);
  for (std::size_t w = boundary; w < word_count; ++w) {
    labels[w] = Label::kMachine;
  }
  return labels;
}

LabelSequence WordLabelsFromTokens(std::span<const Label> token_labels,
                                   std::span<const std::size_t> word_index,
                                   std::size_t word_count) {
  if (token_labels.empty()) throw ValidationError("token label list is empty");
  if (token_labels.size() != word_index.size()) {
    throw ValidationError("token labels and word_index differ in length");
  }
  if (word_index.front() != 0) {
    throw ValidationError("word_index must start at 0");
  }
  for (std::size_t t = 1; t < word_index.size(); ++t) {
    const std::size_t step = word_index[t] - word_index[t - 1];
    if (word_index[t] < word_index[t - 1] || step > 1) {
      throw ValidationError("word_index must advance by 0 or 1 at token " +
                            std::to_string(t));
    }
  }
  if (word_index.back() >= word_count) {
    throw ValidationError("token alignment reaches word " +
                          std::to_string(word_index.back()) +
                          " but the text has " + std::to_string(word_count) +
                          " words");
  }

  LabelSequence labels(word_count, Label::kHuman);
  for (std::size_t t = 0; t < token_labels.size(); ++t) {
    if (token_labels[t] == Label::kMachine) {
      labels[word_index[t]] = Label::kMachine;
    }
  }
  const Label tail = labels[word_index.back()];
  for (std::size_t w = word_index.back() + 1; w < word_count; ++w) {
    labels[w] = tail;
  }
  return labels;
}

std::size_t DecodeFirstChange(std::span<const Label> labels) {
  RequireNonEmpty(labels);
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] != labels[i - 1]) return i;
  }
  return NoChangeBoundary(labels);
}

std::size_t DecodeConfirmedChange(std::span<const Label> labels) {
  RequireNonEmpty(labels);
  const std::size_t n = labels.size();
  bool any_change = false;
  for (std::size_t i = 1; i < n; ++i) {
    if (labels[i] == labels[i - 1]) continue;
    any_change = true;
    if (i + 1 == n || labels[i + 1] == labels[i]) return i;
  }
  return any_change ? DecodeFirstChange(labels) : NoChangeBoundary(labels);
}

std::size_t DecodeBoundary(std::span<const Label> labels, Approach approach) {
  return approach == Approach::kFirstChange ? DecodeFirstChange(labels)
                                            : DecodeConfirmedChange(labels);
}

}  // namespace bcrf
