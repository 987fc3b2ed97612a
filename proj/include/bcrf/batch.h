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

// Record-parallel kernels. Each OpenMP kernel has a *Serial twin used as the
// reference in tests and benchmarks; results are written per record and any
// reduction runs serially in record order, so both produce identical bits.

#ifndef BCRF_BATCH_H_
#define BCRF_BATCH_H_

#include <span>
#include <vector>

#include "bcrf/model.h"
#include "bcrf/record.h"
#include "bcrf/trainer.h"

namespace bcrf {

// A featurized, labeled training record (one token per word).
struct TrainingExample {
  std::vector<FeatureVector> features;
  LabelSequence gold;
};

std::vector<double> NllPerExample(const Model& model,
                                  std::span<const TrainingExample> examples);
std::vector<double> NllPerExampleSerial(
    const Model& model, std::span<const TrainingExample> examples);

// Sum in index order divided by count; 0 for an empty list.
double OrderedMean(std::span<const double> values);

// `external` is either empty or holds one entry per record (nullptr means
// built-in emissions). If any record fails, the error of the lowest-indexed
// failing record is rethrown.
std::vector<PredictOutput> PredictBatch(
    const Model& model, std::span<const TextRecord> records, Approach approach,
    std::span<const EmissionMatrix* const> external = {});
std::vector<PredictOutput> PredictBatchSerial(
    const Model& model, std::span<const TextRecord> records, Approach approach,
    std::span<const EmissionMatrix* const> external = {});

}  // namespace bcrf

#endif  // BCRF_BATCH_H_
