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

// Adam with bias correction and decoupled weight decay:
//
//   m <- b1 m + (1 - b1) g          v <- b2 v + (1 - b2) g^2
//   p <- p - lr * m_hat / (sqrt(v_hat) + eps)
//   p <- p * (1 - lr * weight_decay)

#ifndef BCRF_ADAM_H_
#define BCRF_ADAM_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bcrf/crf.h"

namespace bcrf {

struct AdamHyper {
  double learning_rate = 2e-5;
  double weight_decay = 1e-2;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  std::vector<double> first_moment;
  std::vector<double> second_moment;
  std::uint64_t step = 0;

  static AdamState Zeros(std::size_t size);
};

// Dense step over a flat parameter vector. Increments state.step.
// Throws ValidationError on shape mismatch.
void AdamStep(std::span<double> params, std::span<const double> grads,
              AdamState& state, double learning_rate, double weight_decay);

// Row-sparse variant for the emitter table: updates only `rows`, using the
// already-incremented `step` for bias correction. Rows with zero moments,
// zero gradient and zero weight are fixed points of the dense update, so
// passing every row that has ever received a gradient reproduces dense Adam
// exactly.
void AdamUpdateRows(std::span<LabelScores> params,
                    std::span<const LabelScores> grads,
                    std::span<LabelScores> first_moment,
                    std::span<LabelScores> second_moment,
                    std::span<const std::uint32_t> rows, std::uint64_t step,
                    const AdamHyper& hyper);

// Single-threaded reference for AdamUpdateRows.
void AdamUpdateRowsSerial(std::span<LabelScores> params,
                          std::span<const LabelScores> grads,
                          std::span<LabelScores> first_moment,
                          std::span<LabelScores> second_moment,
                          std::span<const std::uint32_t> rows,
                          std::uint64_t step, const AdamHyper& hyper);

namespace internal {

struct BiasCorrection {
  double first;
  double second;
};

inline BiasCorrection Correction(std::uint64_t step, const AdamHyper& h) {
  const double t = static_cast<double>(step);
  return {1.0 - std::pow(h.beta1, t), 1.0 - std::pow(h.beta2, t)};
}

inline void AdamScalar(double& p, double g, double& m, double& v,
                       const BiasCorrection& bc, const AdamHyper& h) {
  m = h.beta1 * m + (1.0 - h.beta1) * g;
  v = h.beta2 * v + (1.0 - h.beta2) * g * g;
  const double m_hat = m / bc.first;
  const double v_hat = v / bc.second;
  p -= h.learning_rate * m_hat / (std::sqrt(v_hat) + h.epsilon);
  p *= 1.0 - h.learning_rate * h.weight_decay;
}

}  // namespace internal
}  // namespace bcrf

#endif  // BCRF_ADAM_H_
