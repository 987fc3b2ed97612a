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

// bcrf: train, predict, evaluate and analyze human/machine text boundaries.
//
// Exit codes: 0 success, 1 validation failure (including bad usage),
// 2 I/O failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bcrf/analysis.h"
#include "bcrf/batch.h"
#include "bcrf/error.h"
#include "bcrf/io.h"
#include "bcrf/metrics.h"
#include "bcrf/synthetic.h"
#include "bcrf/trainer.h"

namespace {

using namespace bcrf;

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct TrainArgs {
  std::string data, out, label_convention = "first-machine";
  TrainConfig config;
};

struct PredictArgs {
  std::string model, data, emissions, out;
  int approach = 2;
};

struct EvaluateArgs {
  std::string data, predictions, out, format = "json";
  std::string label_convention = "first-machine";
};

struct AnalyzeArgs {
  std::string data, predictions, out_dir;
  std::string label_convention = "first-machine";
  std::size_t bins = 10;
};

struct SynthArgs {
  std::string out;
  std::size_t records = 1000;
  std::size_t vocabulary = 400;
  std::uint64_t vocabulary_seed = 7;
  std::uint64_t seed = 1;
};

DatasetOptions Options(const std::string& convention, bool require_label) {
  return DatasetOptions{require_label, ParseLabelConvention(convention)};
}

int RunTrain(const TrainArgs& a) {
  const auto records = LoadDataset(a.data, Options(a.label_convention, true));
  TrainReport report;
  const Model model = Train(records, a.config, &report);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  for (std::size_t e = 0; e < report.epoch_mean_nll.size(); ++e) {
    std::fprintf(stderr, "epoch %zu mean_nll %.6f\n", e,
                 report.epoch_mean_nll[e]);
  }
  SaveModel(a.out, model);
  std::fprintf(stderr, "trained on %zu records, model written to %s\n",
               report.records_used, a.out.c_str());
  return 0;
}

int RunPredict(const PredictArgs& a) {
  const Model model = LoadModel(a.model);
  const auto records = LoadDataset(a.data, Options("first-machine", false));
  const Approach approach = ApproachFromInt(a.approach);

  EmissionTable table;
  std::vector<const EmissionMatrix*> external;
  if (!a.emissions.empty()) {
    table = LoadEmissions(a.emissions);
    std::string missing;
    for (const auto& r : records) {
      const auto it = table.find(r.id);
      if (it == table.end()) {
        missing += missing.empty() ? r.id : ", " + r.id;
        external.push_back(nullptr);
      } else {
        external.push_back(&it->second);
      }
    }
    if (!missing.empty()) {
      throw ValidationError("no emissions for ids: " + missing);
    }
  }

  const auto outputs = PredictBatch(model, records, approach, external);
  std::vector<BoundaryPrediction> preds;
  preds.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    preds.push_back({records[i].id, outputs[i].boundary});
  }
  WriteFile(a.out, SerializePredictions(preds));
  return 0;
}

int RunEvaluate(const EvaluateArgs& a) {
  const ReportFormat format = ParseReportFormat(a.format);
  const auto records = LoadDataset(a.data, Options(a.label_convention, true));
  const auto preds = LoadPredictions(a.predictions);
  const EvalResult result = Evaluate(records, preds);
  WriteFile(a.out, RenderReport(result, format));
  return 0;
}

int RunAnalyze(const AnalyzeArgs& a) {
  const auto records = LoadDataset(a.data, Options(a.label_convention, true));
  std::map<std::string, std::size_t> predicted;
  if (!a.predictions.empty()) {
    for (const auto& p : LoadPredictions(a.predictions)) {
      predicted[p.id] = p.boundary;
    }
  }

  std::vector<PosPairObservation> pairs;
  std::vector<LocationRecord> locations;
  PosCounts pos_counts;
  for (const auto& r : records) {
    const WordSequence words = SplitWords(r.text);
    std::vector<PosTag> tags;
    if (r.pos_tags) {
      for (const auto& t : *r.pos_tags) tags.push_back(PosTagFromString(t));
    } else {
      tags = PosTagWords(words);
    }
    PosPairObservation obs{BoundaryPosPair(words, tags, *r.label), std::nullopt};
    if (!predicted.empty()) {
      const auto it = predicted.find(r.id);
      if (it == predicted.end()) {
        throw ValidationError("no prediction for id '" + r.id + "'");
      }
      const std::size_t g = *r.label, p = it->second;
      obs.abs_error = static_cast<double>(g > p ? g - p : p - g);
    }
    pairs.push_back(obs);
    pos_counts.Add(tags, *r.label);
    locations.push_back({*r.label, words.size()});
  }

  std::filesystem::create_directories(a.out_dir);
  const std::filesystem::path dir(a.out_dir);
  WriteFile(dir / "pos_pairs.csv", RenderPosPairCsv(PosPairTable(pairs)));
  WriteFile(dir / "pos_distribution.csv", RenderPosDistributionCsv(pos_counts));
  WriteFile(dir / "boundary_histogram.csv",
            RenderHistogramCsv(BoundaryLocationHistogram(locations, a.bins)));
  return 0;
}

int RunSynth(const SynthArgs& a) {
  const auto vocab = MakeSyntheticVocabulary(a.vocabulary, a.vocabulary_seed);
  SyntheticCorpusConfig c;
  c.records = a.records;
  c.seed = a.seed;
  SaveDataset(a.out, MakeSyntheticCorpus(vocab, c));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detect the boundary between human-written and machine-generated text"};
  app.require_subcommand(1);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train emitter + CRF on a dataset");
  train_cmd->add_option("--data", train.data, "Training dataset (JSON lines)")->required();
  train_cmd->add_option("--out", train.out, "Output model file")->required();
  train_cmd->add_option("--lr", train.config.learning_rate, "Reference learning rate")
      ->capture_default_str();
  train_cmd->add_option("--lr-multiplier", train.config.lr_multiplier,
                        "Effective step size is lr * lr-multiplier")
      ->capture_default_str();
  train_cmd->add_option("--weight-decay", train.config.weight_decay)->capture_default_str();
  train_cmd->add_option("--dropout", train.config.dropout_rate, "Feature dropout rate")
      ->capture_default_str();
  train_cmd->add_option("--epochs", train.config.epochs)->capture_default_str();
  train_cmd->add_option("--seed", train.config.seed)->capture_default_str();
  train_cmd->add_option("--max-tokens", train.config.max_tokens, "0 = unlimited")
      ->capture_default_str();
  train_cmd->add_option("--hash-dim", train.config.hash_dim, "Power of two")
      ->capture_default_str();
  train_cmd->add_option("--label-convention", train.label_convention,
                        "first-machine or last-human")
      ->capture_default_str();

  PredictArgs predict;
  auto* predict_cmd = app.add_subcommand("predict", "Predict boundaries");
  predict_cmd->add_option("--model", predict.model)->required();
  predict_cmd->add_option("--data", predict.data)->required();
  predict_cmd->add_option("--emissions", predict.emissions,
                          "External per-token emissions (JSON lines)");
  predict_cmd->add_option("--approach", predict.approach,
                          "1 = first change, 2 = confirmed change")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  predict_cmd->add_option("--out", predict.out)->required();

  EvaluateArgs evaluate;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score predictions");
  evaluate_cmd->add_option("--data", evaluate.data)->required();
  evaluate_cmd->add_option("--predictions", evaluate.predictions)->required();
  evaluate_cmd->add_option("--out", evaluate.out)->required();
  evaluate_cmd->add_option("--format", evaluate.format)
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  evaluate_cmd->add_option("--label-convention", evaluate.label_convention)
      ->capture_default_str();

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Write POS and location CSVs");
  analyze_cmd->add_option("--data", analyze.data)->required();
  analyze_cmd->add_option("--predictions", analyze.predictions);
  analyze_cmd->add_option("--out-dir", analyze.out_dir)->required();
  analyze_cmd->add_option("--bins", analyze.bins)->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze_cmd->add_option("--label-convention", analyze.label_convention)
      ->capture_default_str();

  std::string which;
  auto* format_cmd = app.add_subcommand("export-format", "Print a file format description");
  format_cmd->add_option("--which", which)
      ->check(CLI::IsMember({"dataset", "emissions", "model", "predictions"}))
      ->required();

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic two-vocabulary corpus");
  synth_cmd->add_option("--out", synth.out)->required();
  synth_cmd->add_option("--records", synth.records)->capture_default_str();
  synth_cmd->add_option("--vocabulary", synth.vocabulary, "Words per side")
      ->capture_default_str();
  synth_cmd->add_option("--vocabulary-seed", synth.vocabulary_seed)->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*train_cmd) return RunTrain(train);
    if (*predict_cmd) return RunPredict(predict);
    if (*evaluate_cmd) return RunEvaluate(evaluate);
    if (*analyze_cmd) return RunAnalyze(analyze);
    if (*synth_cmd) return RunSynth(synth);
    if (*format_cmd) {
      if (which == "dataset") std::cout << DatasetFormatSpec();
      if (which == "emissions") std::cout << EmissionsFormatSpec();
      if (which == "model") std::cout << ModelFormatSpec();
      if (which == "predictions") std::cout << PredictionsFormatSpec();
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
