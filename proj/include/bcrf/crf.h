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

// Exact inference and learning for a two-label linear-chain CRF.
//
// A path y = (y_0, ..., y_{T-1}) over labels {HUMAN, MACHINE} scores
//
//   start[y_0] + sum_t emit[t][y_t] + sum_t trans[y_t][y_{t+1}] + end[y_{T-1}]
//
// and the model distribution is P(y) = exp(score(y)) / Z. Everything runs in
// log-space so sequences of thousands of tokens neither overflow nor
// underflow.

#ifndef BCRF_CRF_H_
#define BCRF_CRF_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bcrf {

enum class Label : std::uint8_t { kHuman = 0, kMachine = 1 };

inline constexpr std::size_t kNumLabels = 2;

inline constexpr std::size_t LabelIndex(Label y) {
  return static_cast<std::size_t>(y);
}

using LabelSequence = std::vector<Label>;
using LabelScores = std::array<double, kNumLabels>;

struct CrfParams {
  LabelScores start{};
  // transition[from][to]
  std::array<LabelScores, kNumLabels> transition{};
  LabelScores end{};

  bool operator==(const CrfParams&) const = default;
};

// Per-token scores plus the token -> word alignment. word_index starts at 0
// and advances by 0 or 1 per token.
struct EmissionMatrix {
  std::vector<LabelScores> scores;
  std::vector<std::size_t> word_index;

  std::size_t size() const { return scores.size(); }

  // Identity alignment: token t belongs to word t.
  static EmissionMatrix OnePerWord(std::vector<LabelScores> scores);
};

struct PosteriorMarginals {
  std::vector<LabelScores> probs;
};

struct ViterbiResult {
  LabelSequence labels;
  double score = 0.0;
};

struct NllGradient {
  double nll = 0.0;
  std::vector<LabelScores> d_emissions;
  CrfParams d_params;
};

// Throws ValidationError when the matrix is empty, has a non-finite score or
// a malformed alignment.
void ValidateEmissions(const EmissionMatrix& emissions);
void ValidateParams(const CrfParams& params);

// Unnormalized score of a single label path.
double PathScore(const EmissionMatrix& emissions, const CrfParams& params,
                 std::span<const Label> path);

double LogPartition(const EmissionMatrix& emissions, const CrfParams& params);

// Max-score path. Among equal-score paths the lexicographically smallest one
// (label 0 preferred at the earliest differing position) is returned.
ViterbiResult Viterbi(const EmissionMatrix& emissions, const CrfParams& params);

PosteriorMarginals Marginals(const EmissionMatrix& emissions,
                             const CrfParams& params);

// Negative log-likelihood of `gold` and its gradient with respect to the
// emissions and every CRF parameter.
NllGradient NllGrad(const EmissionMatrix& emissions, const CrfParams& params,
                    std::span<const Label> gold);

}  // namespace bcrf

#endif  // BCRF_CRF_H_
