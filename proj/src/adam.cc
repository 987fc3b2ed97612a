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

#include "bcrf/adam.h"

#include <string>

#include "bcrf/error.h"

namespace bcrf {
namespace {

constexpr std::ptrdiff_t kParallelRowThreshold = 8192;

void CheckRowShapes(std::span<LabelScores> params,
                    std::span<const LabelScores> grads,
                    std::span<LabelScores> m, std::span<LabelScores> v,
                    std::span<const std::uint32_t> rows) {
  if (grads.size() != params.size() || m.size() != params.size() ||
      v.size() != params.size()) {
    throw ValidationError("Adam row buffers differ in size");
  }
  for (std::uint32_t r : rows) {
    if (r >= params.size()) {
      throw ValidationError("Adam row " + std::to_string(r) + " out of range");
    }
  }
}

inline void UpdateRow(std::span<LabelScores> params,
                      std::span<const LabelScores> grads,
                      std::span<LabelScores> m, std::span<LabelScores> v,
                      std::uint32_t r, const internal::BiasCorrection& bc,
                      const AdamHyper& h) {
  for (std::size_t y = 0; y < kNumLabels; ++y) {
    internal::AdamScalar(params[r][y], grads[r][y], m[r][y], v[r][y], bc, h);
  }
}

}  // namespace

AdamState AdamState::Zeros(std::size_t size) {
  return AdamState{std::vector<double>(size, 0.0),
                   std::vector<double>(size, 0.0), 0};
}

void AdamStep(std::span<double> params, std::span<const double> grads,
              AdamState& state, double learning_rate, double weight_decay) {
  if (grads.size() != params.size() ||
      state.first_moment.size() != params.size() ||
      state.second_moment.size() != params.size()) {
    throw ValidationError("Adam shape mismatch: " +
                          std::to_string(params.size()) + " parameters, " +
                          std::to_string(grads.size()) + " gradients, " +
                          std::to_string(state.first_moment.size()) +
                          " moments");
  }
  ++state.step;
  const AdamHyper h{learning_rate, weight_decay};
  const auto bc = internal::Correction(state.step, h);
  for (std::size_t i = 0; i < params.size(); ++i) {
    internal::AdamScalar(params[i], grads[i], state.first_moment[i],
                         state.second_moment[i], bc, h);
  }
}

void AdamUpdateRows(std::span<LabelScores> params,
                    std::span<const LabelScores> grads,
                    std::span<LabelScores> first_moment,
                    std::span<LabelScores> second_moment,
                    std::span<const std::uint32_t> rows, std::uint64_t step,
                    const AdamHyper& hyper) {
  CheckRowShapes(params, grads, first_moment, second_moment, rows);
  const auto bc = internal::Correction(step, hyper);
  const auto n = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(static) if (n > kParallelRowThreshold)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    UpdateRow(params, grads, first_moment, second_moment, rows[k], bc, hyper);
  }
}

void AdamUpdateRowsSerial(std::span<LabelScores> params,
                          std::span<const LabelScores> grads,
                          std::span<LabelScores> first_moment,
                          std::span<LabelScores> second_moment,
                          std::span<const std::uint32_t> rows,
                          std::uint64_t step, const AdamHyper& hyper) {
  CheckRowShapes(params, grads, first_moment, second_moment, rows);
  const auto bc = internal::Correction(step, hyper);
  for (std::uint32_t r : rows) {
    UpdateRow(params, grads, first_moment, second_moment, r, bc, hyper);
  }
}

}  // namespace bcrf
