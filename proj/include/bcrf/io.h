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

// File formats: JSON-lines datasets, emissions and predictions, the binary
// model container, evaluation reports and analysis CSVs.
//
// Parse* functions work on in-memory bytes and throw ValidationError with
// line numbers; Load*/Save* add file access and throw IoError when the file
// cannot be read or written.

#ifndef BCRF_IO_H_
#define BCRF_IO_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcrf/analysis.h"
#include "bcrf/crf.h"
#include "bcrf/metrics.h"
#include "bcrf/model.h"
#include "bcrf/record.h"

namespace bcrf {

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view bytes);

// kLastHuman datasets store the index of the last human word; ingestion adds
// one so every label becomes the first machine word.
enum class LabelConvention { kFirstMachine, kLastHuman };

LabelConvention ParseLabelConvention(std::string_view name);

struct DatasetOptions {
  bool require_label = true;
  LabelConvention convention = LabelConvention::kFirstMachine;
};

std::vector<TextRecord> ParseDataset(std::string_view content,
                                     const DatasetOptions& options = {});
std::vector<TextRecord> LoadDataset(const std::filesystem::path& path,
                                    const DatasetOptions& options = {});
// Labels are written in the first-machine convention.
std::string SerializeDataset(std::span<const TextRecord> records);
void SaveDataset(const std::filesystem::path& path,
                 std::span<const TextRecord> records);

using EmissionTable = std::map<std::string, EmissionMatrix>;

EmissionTable ParseEmissions(std::string_view content);
EmissionTable LoadEmissions(const std::filesystem::path& path);
std::string SerializeEmissionRecord(std::string_view id,
                                    const EmissionMatrix& emissions);

std::vector<BoundaryPrediction> ParsePredictions(std::string_view content);
std::vector<BoundaryPrediction> LoadPredictions(
    const std::filesystem::path& path);
std::string SerializePredictions(std::span<const BoundaryPrediction> preds);

// Little-endian binary container; layout in ModelFormatSpec().
std::string SerializeModel(const Model& model);
Model DeserializeModel(std::string_view bytes);
void SaveModel(const std::filesystem::path& path, const Model& model);
Model LoadModel(const std::filesystem::path& path);

enum class ReportFormat { kJson, kCsv, kMarkdown };

ReportFormat ParseReportFormat(std::string_view name);
std::string RenderReport(const EvalResult& result, ReportFormat format);

std::string RenderPosPairCsv(std::span<const PosPairRow> rows);
std::string RenderPosDistributionCsv(const PosCounts& counts);
std::string RenderHistogramCsv(std::span<const std::size_t> counts);

// Human-readable format descriptions for `export-format`.
std::string DatasetFormatSpec();
std::string EmissionsFormatSpec();
std::string ModelFormatSpec();
std::string PredictionsFormatSpec();

}  // namespace bcrf

#endif  // BCRF_IO_H_
