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

// Boundary <-> label conversions and the two boundary decoders.
//
// A boundary is the index of the first machine-generated word: word_count
// for a fully human text, 0 for a fully machine text.

#ifndef BCRF_BOUNDARY_H_
#define BCRF_BOUNDARY_H_

#include <cstddef>
#include <span>

#include "bcrf/crf.h"

namespace bcrf {

enum class Approach { kFirstChange = 1, kConfirmedChange = 2 };

// Throws ValidationError unless 1 <= value <= 2.
Approach ApproachFromInt(int value);

LabelSequence LabelsFromBoundary(std::size_t boundary, std::size_t word_count);

// A word is MACHINE if any of its tokens is. Words past the last token
// (truncation) inherit the last covered word's label.
LabelSequence WordLabelsFromTokens(std::span<const Label> token_labels,
                                   std::span<const std::size_t> word_index,
                                   std::size_t word_count);

// Index of the first label change; word_count if all HUMAN, 0 if all MACHINE.
std::size_t DecodeFirstChange(std::span<const Label> labels);

// First change that the following label confirms (a change at the last
// index needs no confirmation). Falls back to DecodeFirstChange when no
// change is confirmed.
std::size_t DecodeConfirmedChange(std::span<const Label> labels);

std::size_t DecodeBoundary(std::span<const Label> labels, Approach approach);

}  // namespace bcrf

#endif  // BCRF_BOUNDARY_H_
