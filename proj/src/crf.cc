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

#include "bcrf/crf.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "bcrf/error.h"

namespace bcrf {
namespace {

inline double LogSumExp2(double a, double b) {
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

// alpha[t][y]: log-sum of all prefixes ending in y at t, emissions included.
std::vector<LabelScores> Forward(const EmissionMatrix& em,
                                 const CrfParams& p) {
  const std::size_t n = em.size();
  std::vector<LabelScores> alpha(n);
  for (std::size_t y = 0; y < kNumLabels; ++y) {
    alpha[0][y] = p.start[y] + em.scores[0][y];
  }
  for (std::size_t t = 1; t < n; ++t) {
    for (std::size_t j = 0; j < kNumLabels; ++j) {
      alpha[t][j] = LogSumExp2(alpha[t - 1][0] + p.transition[0][j],
                               alpha[t - 1][1] + p.transition[1][j]) +
                    em.scores[t][j];
    }
  }
  return alpha;
}

// beta[t][y]: log-sum of all suffixes after t given y at t, end included.
std::vector<LabelScores> Backward(const EmissionMatrix& em,
                                  const CrfParams& p) {
  const std::size_t n = em.size();
  std::vector<LabelScores> beta(n);
  beta[n - 1] = p.end;
  for (std::size_t t = n - 1; t-- > 0;) {
    for (std::size_t i = 0; i < kNumLabels; ++i) {
      beta[t][i] = LogSumExp2(
          p.transition[i][0] + em.scores[t + 1][0] + beta[t + 1][0],
          p.transition[i][1] + em.scores[t + 1][1] + beta[t + 1][1]);
    }
  }
  return beta;
}

double Finish(const std::vector<LabelScores>& alpha, const CrfParams& p) {
  const auto& last = alpha.back();
  return LogSumExp2(last[0] + p.end[0], last[1] + p.end[1]);
}

}  // namespace

EmissionMatrix EmissionMatrix::OnePerWord(std::vector<LabelScores> scores) {
  EmissionMatrix em;
  em.word_index.resize(scores.size());
  for (std::size_t t = 0; t < scores.size(); ++t) em.word_index[t] = t;
  em.scores = std::move(scores);
  return em;
}

void ValidateEmissions(const EmissionMatrix& em) {
  if (em.scores.empty()) {
    throw ValidationError("emission matrix is empty");
  }
  if (em.word_index.size() != em.scores.size()) {
    throw ValidationError("emission matrix has " +
                          std::to_string(em.scores.size()) + " rows but " +
                          std::to_string(em.word_index.size()) +
                          " word indices");
  }
  for (std::size_t t = 0; t < em.size(); ++t) {
    for (double s : em.scores[t]) {
      if (!std::isfinite(s)) {
        throw ValidationError("non-finite emission score at token " +
                              std::to_string(t));
      }
    }
    const std::size_t expected_lo = t == 0 ? 0 : em.word_index[t - 1];
    const std::size_t expected_hi = t == 0 ? 0 : em.word_index[t - 1] + 1;
    if (em.word_index[t] < expected_lo || em.word_index[t] > expected_hi) {
      throw ValidationError("word_index at token " + std::to_string(t) +
                            " must be " + std::to_string(expected_lo) +
                            (t == 0 ? "" : " or " + std::to_string(expected_hi)));
    }
  }
}

void ValidateParams(const CrfParams& p) {
  auto check = [](double v) {
    if (!std::isfinite(v)) throw ValidationError("non-finite CRF parameter");
  };
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    check(p.start[i]);
    check(p.end[i]);
    for (std::size_t j = 0; j < kNumLabels; ++j) check(p.transition[i][j]);
  }
}

double PathScore(const EmissionMatrix& em, const CrfParams& p,
                 std::span<const Label> path) {
  if (path.size() != em.size()) {
    throw ValidationError("path length " + std::to_string(path.size()) +
                          " does not match " + std::to_string(em.size()) +
                          " tokens");
  }
  double s = p.start[LabelIndex(path.front())] + p.end[LabelIndex(path.back())];
  for (std::size_t t = 0; t < path.size(); ++t) {
    s += em.scores[t][LabelIndex(path[t])];
    if (t > 0) s += p.transition[LabelIndex(path[t - 1])][LabelIndex(path[t])];
  }
  return s;
}

double LogPartition(const EmissionMatrix& em, const CrfParams& p) {
  ValidateEmissions(em);
  ValidateParams(p);
  return Finish(Forward(em, p), p);
}

ViterbiResult Viterbi(const EmissionMatrix& em, const CrfParams& p) {
  ValidateEmissions(em);
  ValidateParams(p);
  const std::size_t n = em.size();

  // best[t][y]: best suffix score after t given y at t. Decoding then walks
  // forward and keeps label 0 unless label 1 is strictly better, which
  // yields the lexicographically smallest argmax.
  std::vector<LabelScores> best(n);
  best[n - 1] = p.end;
  for (std::size_t t = n - 1; t-- > 0;) {
    for (std::size_t i = 0; i < kNumLabels; ++i) {
      best[t][i] =
          std::max(p.transition[i][0] + em.scores[t + 1][0] + best[t + 1][0],
                   p.transition[i][1] + em.scores[t + 1][1] + best[t + 1][1]);
    }
  }

  ViterbiResult out;
  out.labels.resize(n);
  const double v0 = p.start[0] + em.scores[0][0] + best[0][0];
  const double v1 = p.start[1] + em.scores[0][1] + best[0][1];
  std::size_t prev = v1 > v0 ? 1 : 0;
  out.score = std::max(v0, v1);
  out.labels[0] = static_cast<Label>(prev);
  for (std::size_t t = 1; t < n; ++t) {
    const double c0 = p.transition[prev][0] + em.scores[t][0] + best[t][0];
    const double c1 = p.transition[prev][1] + em.scores[t][1] + best[t][1];
    prev = c1 > c0 ? 1 : 0;
    out.labels[t] = static_cast<Label>(prev);
  }
  return out;
}

PosteriorMarginals Marginals(const EmissionMatrix& em, const CrfParams& p) {
  ValidateEmissions(em);
  ValidateParams(p);
  const auto alpha = Forward(em, p);
  const auto beta = Backward(em, p);
  const double log_z = Finish(alpha, p);

  PosteriorMarginals out;
  out.probs.resize(em.size());
  for (std::size_t t = 0; t < em.size(); ++t) {
    // Normalize per row against the two-term sum rather than log_z so rows
    // sum to one regardless of accumulated rounding in log_z.
    const double a = alpha[t][0] + beta[t][0] - log_z;
    const double b = alpha[t][1] + beta[t][1] - log_z;
    const double row = LogSumExp2(a, b);
    out.probs[t][0] = std::exp(a - row);
    out.probs[t][1] = std::exp(b - row);
  }
  return out;
}

NllGradient NllGrad(const EmissionMatrix& em, const CrfParams& p,
                    std::span<const Label> gold) {
  ValidateEmissions(em);
  ValidateParams(p);
  if (gold.size() != em.size()) {
    throw ValidationError("gold length " + std::to_string(gold.size()) +
                          " does not match " + std::to_string(em.size()) +
                          " tokens");
  }
  const std::size_t n = em.size();
  const auto alpha = Forward(em, p);
  const auto beta = Backward(em, p);
  const double log_z = Finish(alpha, p);

  NllGradient g;
  g.nll = std::max(0.0, log_z - PathScore(em, p, gold));
  g.d_emissions.resize(n);

  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t y = 0; y < kNumLabels; ++y) {
      g.d_emissions[t][y] = std::exp(alpha[t][y] + beta[t][y] - log_z);
    }
    g.d_emissions[t][LabelIndex(gold[t])] -= 1.0;
  }
  for (std::size_t y = 0; y < kNumLabels; ++y) {
    g.d_params.start[y] = std::exp(p.start[y] + em.scores[0][y] + beta[0][y] -
                                   log_z);
    g.d_params.end[y] = std::exp(alpha[n - 1][y] + p.end[y] - log_z);
  }
  g.d_params.start[LabelIndex(gold.front())] -= 1.0;
  g.d_params.end[LabelIndex(gold.back())] -= 1.0;

  for (std::size_t t = 0; t + 1 < n; ++t) {
    for (std::size_t i = 0; i < kNumLabels; ++i) {
      for (std::size_t j = 0; j < kNumLabels; ++j) {
        g.d_params.transition[i][j] +=
            std::exp(alpha[t][i] + p.transition[i][j] + em.scores[t + 1][j] +
                     beta[t + 1][j] - log_z);
      }
    }
    g.d_params.transition[LabelIndex(gold[t])][LabelIndex(gold[t + 1])] -= 1.0;
  }
  return g;
}

}  // namespace bcrf
