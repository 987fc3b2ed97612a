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

#include "bcrf/trainer.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bcrf/adam.h"
#include "bcrf/error.h"
#include "bcrf/io.h"
#include "bcrf/synthetic.h"
#include "gtest/gtest.h"

namespace bcrf {
namespace {

TrainConfig FastConfig() {
  TrainConfig c;
  c.hash_dim = 1 << 14;
  c.seed = 17;
  return c;
}

TEST(AdamStepTest, ZeroGradientLeavesParameters) {
  std::vector<double> p = {1.0, -2.0, 0.5};
  const std::vector<double> g(3, 0.0);
  auto state = AdamState::Zeros(3);
  for (int i = 0; i < 5; ++i) AdamStep(p, g, state, 0.1, 0.0);
  EXPECT_EQ(p, (std::vector<double>{1.0, -2.0, 0.5}));
  EXPECT_EQ(state.step, 5u);
}

TEST(AdamStepTest, FirstStepMovesByLearningRate) {
  std::vector<double> p = {0.0, 0.0};
  const std::vector<double> g = {3.0, -0.02};
  auto state = AdamState::Zeros(2);
  AdamStep(p, g, state, 1e-3, 0.0);
  // m_hat = g, v_hat = g^2, so the step is lr * g / (|g| + eps).
  EXPECT_NEAR(p[0], -1e-3, 1e-11);
  EXPECT_NEAR(p[1], 1e-3, 1e-9);
}

TEST(AdamStepTest, TwoStepsWithDecayMatchHandComputation) {
  std::vector<double> p = {1.0};
  auto state = AdamState::Zeros(1);
  AdamStep(p, std::vector<double>{0.5}, state, 0.1, 0.01);
  EXPECT_NEAR(p[0], 0.899100001998, 1e-12);
  AdamStep(p, std::vector<double>{-0.25}, state, 0.1, 0.01);
  EXPECT_NEAR(p[0], 0.8715938324071405, 1e-12);
}

TEST(AdamStepTest, ShapeMismatch) {
  std::vector<double> p(3);
  auto state = AdamState::Zeros(3);
  EXPECT_THROW(AdamStep(p, std::vector<double>(2), state, 0.1, 0.0),
               ValidationError);
  auto small = AdamState::Zeros(2);
  EXPECT_THROW(AdamStep(p, std::vector<double>(3), small, 0.1, 0.0),
               ValidationError);
}

TEST(AdamUpdateRowsTest, SparseRowsEqualDenseUpdate) {
  // Rows never touched stay zero under the dense rule, so updating only the
  // touched rows must match a dense step over everything.
  constexpr std::size_t kRows = 64;
  std::vector<LabelScores> sparse(kRows), m1(kRows), v1(kRows);
  std::vector<double> dense(2 * kRows, 0.0);
  auto state = AdamState::Zeros(2 * kRows);
  std::vector<std::uint32_t> active;
  Rng rng(2);
  const AdamHyper hyper{0.05, 0.01};
  for (int step = 1; step <= 30; ++step) {
    std::vector<LabelScores> grad(kRows);
    std::vector<double> flat(2 * kRows, 0.0);
    for (int k = 0; k < 3; ++k) {
      const auto r = static_cast<std::uint32_t>(rng.Below(kRows / 2));
      grad[r] = {rng.Normal(), rng.Normal()};
      flat[2 * r] = grad[r][0];
      flat[2 * r + 1] = grad[r][1];
      if (std::find(active.begin(), active.end(), r) == active.end()) {
        active.push_back(r);
      }
    }
    AdamUpdateRows(sparse, grad, m1, v1, active, step, hyper);
    AdamStep(dense, flat, state, hyper.learning_rate, hyper.weight_decay);
  }
  for (std::size_t r = 0; r < kRows; ++r) {
    EXPECT_EQ(sparse[r][0], dense[2 * r]);
    EXPECT_EQ(sparse[r][1], dense[2 * r + 1]);
  }
}

TEST(FeatureDropoutTest, ZeroRateIsIdentity) {
  Rng rng(1);
  const FeatureVector f{{1, 5, 9}, 16};
  EXPECT_EQ(ApplyFeatureDropout(f, 0.0, rng), f);
}

TEST(FeatureDropoutTest, SeededSubsetIsDeterministic) {
  FeatureVector f{{}, 1 << 10};
  for (std::uint32_t i = 0; i < 100; ++i) f.indices.push_back(i);
  Rng a(123), b(123);
  const auto fa = ApplyFeatureDropout(f, 0.5, a);
  EXPECT_EQ(fa, ApplyFeatureDropout(f, 0.5, b));
  EXPECT_LT(fa.indices.size(), f.indices.size());
  EXPECT_GT(fa.indices.size(), 0u);
  EXPECT_TRUE(std::includes(f.indices.begin(), f.indices.end(),
                            fa.indices.begin(), fa.indices.end()));
}

TEST(FeatureDropoutTest, EmpiricalRate) {
  FeatureVector f{{}, std::size_t{1} << 20};
  f.indices.resize(1000000);
  std::iota(f.indices.begin(), f.indices.end(), 0u);
  Rng rng(2024);
  const auto kept = ApplyFeatureDropout(f, 0.0075, rng).indices.size();
  const double dropped = 1.0 - static_cast<double>(kept) / 1e6;
  EXPECT_NEAR(dropped, 0.0075, 0.001);
}

TEST(FeatureDropoutTest, RejectsBadRate) {
  Rng rng(1);
  EXPECT_THROW(ApplyFeatureDropout(FeatureVector{{1}, 2}, 1.0, rng),
               ValidationError);
}

TEST(TrainTest, OverfitsSingleRecord) {
  TextRecord r{"one", "We wrote these words. Then a model wrote the rest of it.", 4};
  TrainConfig c = FastConfig();
  c.epochs = 50;
  c.dropout_rate = 0.0;
  TrainReport report;
  const Model m = Train(std::vector<TextRecord>{r}, c, &report);
  ASSERT_EQ(report.epoch_mean_nll.size(), 51u);
  EXPECT_LT(report.epoch_mean_nll.back(), 0.1);
  EXPECT_EQ(Predict(m, r.text, Approach::kConfirmedChange).boundary, 4u);
}

TEST(TrainTest, SkipsInvalidRecordsAndFailsWhenNoneLeft) {
  std::vector<TextRecord> data = {
      {"a", "three words here", 7},
      {"b", "   ", 0},
      {"c", "no label", std::nullopt},
  };
  EXPECT_THROW(Train(data, FastConfig()), ValidationError);
  data.push_back({"d", "good record here", 1});
  TrainReport report;
  TrainConfig c = FastConfig();
  c.epochs = 1;
  Train(data, c, &report);
  EXPECT_EQ(report.records_used, 1u);
  EXPECT_EQ(report.warnings.size(), 3u);
}

TEST(TrainTest, RejectsBadConfig) {
  const std::vector<TextRecord> data = {{"a", "x y", 1}};
  TrainConfig c = FastConfig();
  c.learning_rate = 0.0;
  EXPECT_THROW(Train(data, c), ValidationError);
  c = FastConfig();
  c.dropout_rate = 1.0;
  EXPECT_THROW(Train(data, c), ValidationError);
  c = FastConfig();
  c.epochs = 0;
  EXPECT_THROW(Train(data, c), ValidationError);
  c = FastConfig();
  c.hash_dim = 1000;
  EXPECT_THROW(Train(data, c), ValidationError);
}

class SyntheticTrainTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    const auto vocab = MakeSyntheticVocabulary(150, 3);
    SyntheticCorpusConfig c;
    c.records = 120;
    c.seed = 5;
    train_ = new std::vector<TextRecord>(MakeSyntheticCorpus(vocab, c));
    c.records = 40;
    c.seed = 6;
    c.id_prefix = "heldout";
    heldout_ = new std::vector<TextRecord>(MakeSyntheticCorpus(vocab, c));
  }
  static void TearDownTestSuite() {
    delete train_;
    delete heldout_;
  }
  static std::vector<TextRecord>* train_;
  static std::vector<TextRecord>* heldout_;
};

std::vector<TextRecord>* SyntheticTrainTest::train_ = nullptr;
std::vector<TextRecord>* SyntheticTrainTest::heldout_ = nullptr;

TEST_F(SyntheticTrainTest, LossDecreasesAndHeldOutIsAccurate) {
  TrainConfig c = FastConfig();
  c.epochs = 5;
  TrainReport report;
  const Model m = Train(*train_, c, &report);
  ASSERT_EQ(report.epoch_mean_nll.size(), 6u);
  for (std::size_t e = 1; e <= 3; ++e) {
    EXPECT_LE(report.epoch_mean_nll[e], report.epoch_mean_nll[e - 1]);
  }
  EXPECT_LT(report.epoch_mean_nll[1], report.epoch_mean_nll[0]);

  double total = 0;
  for (const auto& r : *heldout_) {
    const auto out = Predict(m, r.text, Approach::kConfirmedChange);
    EXPECT_LE(out.boundary, out.word_count);
    total += std::abs(static_cast<double>(out.boundary) - static_cast<double>(*r.label));
  }
  EXPECT_LE(total / static_cast<double>(heldout_->size()), 2.0);
}

TEST_F(SyntheticTrainTest, SameSeedGivesIdenticalModelBytes) {
  TrainConfig c = FastConfig();
  c.epochs = 2;
  const std::string a = SerializeModel(Train(*train_, c));
  const std::string b = SerializeModel(Train(*train_, c));
  EXPECT_EQ(a, b);
  c.seed += 1;
  EXPECT_NE(a, SerializeModel(Train(*train_, c)));
}

TEST(PredictTest, ForcedExternalEmissions) {
  Model m;
  m.emitter = EmitterWeights::Zeros(16, 1);
  m.config.hash_dim = 16;
  m.config.hash_seed = 1;
  const auto em = EmissionMatrix::OnePerWord(
      {{5, -5}, {5, -5}, {-5, 5}, {-5, 5}});
  EXPECT_EQ(Predict(m, "a b c d", Approach::kFirstChange, &em).boundary, 2u);
  EXPECT_EQ(Predict(m, "a b c d", Approach::kConfirmedChange, &em).boundary, 2u);

  const auto human = EmissionMatrix::OnePerWord(std::vector<LabelScores>(7, {5, -5}));
  EXPECT_EQ(Predict(m, "1 2 3 4 5 6 7", Approach::kConfirmedChange, &human).boundary,
            7u);
}

TEST(PredictTest, SubwordEmissionsAndTruncation) {
  Model m;
  m.emitter = EmitterWeights::Zeros(16, 1);
  m.config.hash_dim = 16;
  m.config.hash_seed = 1;
  EmissionMatrix em;
  // Word 0 split in two tokens, second token machine; word 1 machine; words
  // 2-3 not covered.
  em.scores = {{5, -5}, {-5, 5}, {-5, 5}};
  em.word_index = {0, 0, 1};
  const auto out = Predict(m, "a b c d", Approach::kFirstChange, &em);
  EXPECT_EQ(out.word_labels, LabelSequence(4, Label::kMachine));
  EXPECT_EQ(out.boundary, 0u);

  em.word_index = {0, 1, 4};
  EXPECT_THROW(Predict(m, "a b c d", Approach::kFirstChange, &em), ValidationError);
  em.word_index = {0, 1, 2};
  EXPECT_THROW(Predict(m, "a b", Approach::kFirstChange, &em), ValidationError);
}

TEST(PredictTest, BuiltinTruncationInheritsLastLabel) {
  Model m;
  m.emitter = EmitterWeights::Zeros(1 << 10, 1);
  m.config.hash_dim = 1 << 10;
  m.config.hash_seed = 1;
  m.config.max_tokens = 3;
  m.crf.end = {0.0, 1.0};  // zero emissions otherwise; last token machine
  const auto out = Predict(m, "a b c d e f", Approach::kFirstChange);
  EXPECT_EQ(BuiltinEmissions(m, SplitWords("a b c d e f")).size(), 3u);
  EXPECT_EQ(out.word_labels,
            (LabelSequence{Label::kHuman, Label::kHuman, Label::kMachine,
                           Label::kMachine, Label::kMachine, Label::kMachine}));
  EXPECT_EQ(out.boundary, 2u);
}

}  // namespace
}  // namespace bcrf
