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

#include "bcrf/batch.h"

#include <algorithm>
#include <cstddef>
#include <exception>

#include "bcrf/error.h"

namespace bcrf {
namespace {

double ExampleNll(const Model& model, const TrainingExample& ex) {
  const EmissionMatrix em = EmissionScores(ex.features, model.emitter);
  return std::max(0.0, LogPartition(em, model.crf) -
                           PathScore(em, model.crf, ex.gold));
}

const EmissionMatrix* ExternalAt(std::span<const EmissionMatrix* const> ext,
                                 std::size_t i) {
  return ext.empty() ? nullptr : ext[i];
}

void CheckExternal(std::span<const TextRecord> records,
                   std::span<const EmissionMatrix* const> external) {
  if (!external.empty() && external.size() != records.size()) {
    throw ValidationError("external emission list does not match record count");
  }
}

void RethrowFirst(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<double> NllPerExample(const Model& model,
                                  std::span<const TrainingExample> examples) {
  std::vector<double> out(examples.size());
  std::vector<std::exception_ptr> errors(examples.size());
  const auto n = static_cast<std::ptrdiff_t>(examples.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = ExampleNll(model, examples[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  RethrowFirst(errors);
  return out;
}

std::vector<double> NllPerExampleSerial(
    const Model& model, std::span<const TrainingExample> examples) {
  std::vector<double> out;
  out.reserve(examples.size());
  for (const auto& ex : examples) out.push_back(ExampleNll(model, ex));
  return out;
}

double OrderedMean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

std::vector<PredictOutput> PredictBatch(
    const Model& model, std::span<const TextRecord> records, Approach approach,
    std::span<const EmissionMatrix* const> external) {
  CheckExternal(records, external);
  std::vector<PredictOutput> out(records.size());
  std::vector<std::exception_ptr> errors(records.size());
  const auto n = static_cast<std::ptrdiff_t>(records.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = Predict(model, records[i].text, approach, ExternalAt(external, i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  RethrowFirst(errors);
  return out;
}

std::vector<PredictOutput> PredictBatchSerial(
    const Model& model, std::span<const TextRecord> records, Approach approach,
    std::span<const EmissionMatrix* const> external) {
  CheckExternal(records, external);
  std::vector<PredictOutput> out;
  out.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    out.push_back(
        Predict(model, records[i].text, approach, ExternalAt(external, i)));
  }
  return out;
}

}  // namespace bcrf
