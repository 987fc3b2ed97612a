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

#include "bcrf/io.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "bcrf/error.h"
#include "bcrf/featurizer.h"
#include "json.hpp"

namespace bcrf {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kMaxReportedErrors = 20;

// Collects per-line problems and throws them together.
class LineErrors {
 public:
  explicit LineErrors(std::string what) : what_(std::move(what)) {}

  void Add(std::size_t line, const std::string& message) {
    ++count_;
    if (count_ <= kMaxReportedErrors) {
      text_ += "\n  line " + std::to_string(line) + ": " + message;
    }
  }

  void ThrowIfAny() const {
    if (count_ == 0) return;
    std::string msg = "invalid " + what_ + " (" + std::to_string(count_) +
                      " error" + (count_ == 1 ? "" : "s") + "):" + text_;
    if (count_ > kMaxReportedErrors) {
      msg += "\n  ... and " + std::to_string(count_ - kMaxReportedErrors) +
             " more";
    }
    throw ValidationError(msg);
  }

 private:
  std::string what_;
  std::string text_;
  std::size_t count_ = 0;
};

// Calls fn(line_number, line) for each non-blank line.
template <typename Fn>
std::size_t ForEachLine(std::string_view content, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t seen = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    ++seen;
    fn(line_no, line);
  }
  return seen;
}

json ParseObject(std::string_view line) {
  json j = json::parse(line.begin(), line.end());
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  return j;
}

std::string IdField(const json& j) {
  const auto it = j.find("id");
  if (it == j.end()) throw ValidationError("missing field 'id'");
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return it->dump();
  throw ValidationError("'id' must be a string or integer");
}

std::optional<std::string> OptionalString(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw ValidationError(std::string("'") + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::int64_t IntegerField(const json& value, const char* key) {
  if (!value.is_number_integer()) {
    throw ValidationError(std::string("'") + key + "' must be an integer");
  }
  if (value.is_number_unsigned()) {
    const auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) {
      throw ValidationError(std::string("'") + key + "' is too large");
    }
    return static_cast<std::int64_t>(u);
  }
  return value.get<std::int64_t>();
}

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string FormatFixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// ---- model container -------------------------------------------------------

constexpr char kModelMagic[8] = {'B', 'C', 'R', 'F', 'M', 'O', 'D', 'L'};
constexpr std::size_t kModelHeaderBytes = 144;

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class ByteWriter {
 public:
  void U32(std::uint32_t v) { Little(v, 4); }
  void U64(std::uint64_t v) { Little(v, 8); }
  void F64(double v) { U64(std::bit_cast<std::uint64_t>(v)); }
  void Raw(const char* data, std::size_t n) { out_.append(data, n); }
  std::string& bytes() { return out_; }

 private:
  void Little(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) {
      out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
  }
  std::string out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::string_view bytes) : bytes_(bytes) {}

  std::uint32_t U32() { return static_cast<std::uint32_t>(Little(4)); }
  std::uint64_t U64() { return Little(8); }
  double F64() { return std::bit_cast<double>(U64()); }

 private:
  std::uint64_t Little(std::size_t n) {
    if (pos_ + n > bytes_.size()) throw ValidationError("truncated model file");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      v |= static_cast<std::uint64_t>(
               static_cast<unsigned char>(bytes_[pos_ + i]))
           << (8 * i);
    }
    pos_ += n;
    return v;
  }
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

LabelConvention ParseLabelConvention(std::string_view name) {
  if (name == "first-machine") return LabelConvention::kFirstMachine;
  if (name == "last-human") return LabelConvention::kLastHuman;
  throw ValidationError("unknown label convention '" + std::string(name) +
                        "' (expected first-machine or last-human)");
}

// ---- datasets --------------------------------------------------------------

std::vector<TextRecord> ParseDataset(std::string_view content,
                                     const DatasetOptions& options) {
  std::vector<TextRecord> records;
  LineErrors errors("dataset");
  const std::size_t lines = ForEachLine(content, [&](std::size_t no,
                                                     std::string_view line) {
    try {
      const json j = ParseObject(line);
      TextRecord r;
      r.id = IdField(j);
      const auto text = j.find("text");
      if (text == j.end()) throw ValidationError("missing field 'text'");
      if (!text->is_string()) throw ValidationError("'text' must be a string");
      r.text = text->get<std::string>();
      const std::size_t words = SplitWords(r.text).size();

      const auto label = j.find("label");
      if (label != j.end() && !label->is_null()) {
        std::int64_t value = IntegerField(*label, "label");
        if (options.convention == LabelConvention::kLastHuman) ++value;
        if (value < 0 || static_cast<std::uint64_t>(value) > words) {
          throw ValidationError("label " + label->dump() + " out of range for " +
                                std::to_string(words) + " words");
        }
        r.label = static_cast<std::size_t>(value);
      } else if (options.require_label) {
        throw ValidationError("missing field 'label'");
      }

      const auto tags = j.find("pos_tags");
      if (tags != j.end() && !tags->is_null()) {
        if (!tags->is_array()) throw ValidationError("'pos_tags' must be an array");
        std::vector<std::string> v;
        for (const auto& t : *tags) {
          if (!t.is_string()) {
            throw ValidationError("'pos_tags' entries must be strings");
          }
          v.push_back(t.get<std::string>());
        }
        if (v.size() != words) {
          throw ValidationError("'pos_tags' has " + std::to_string(v.size()) +
                                " entries for " + std::to_string(words) +
                                " words");
        }
        r.pos_tags = std::move(v);
      }
      r.source = OptionalString(j, "source");
      r.generator = OptionalString(j, "generator");
      records.push_back(std::move(r));
    } catch (const json::exception& e) {
      errors.Add(no, std::string("malformed JSON: ") + e.what());
    } catch (const ValidationError& e) {
      errors.Add(no, e.what());
    }
  });
  errors.ThrowIfAny();
  if (lines == 0) throw ValidationError("dataset is empty");
  return records;
}

std::vector<TextRecord> LoadDataset(const std::filesystem::path& path,
                                    const DatasetOptions& options) {
  return ParseDataset(ReadFile(path), options);
}

std::string SerializeDataset(std::span<const TextRecord> records) {
  std::string out;
  for (const auto& r : records) {
    ordered_json j;
    j["id"] = r.id;
    j["text"] = r.text;
    if (r.label) j["label"] = *r.label;
    if (r.pos_tags) j["pos_tags"] = *r.pos_tags;
    if (r.source) j["source"] = *r.source;
    if (r.generator) j["generator"] = *r.generator;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void SaveDataset(const std::filesystem::path& path,
                 std::span<const TextRecord> records) {
  WriteFile(path, SerializeDataset(records));
}

// ---- emissions -------------------------------------------------------------

EmissionTable ParseEmissions(std::string_view content) {
  EmissionTable table;
  LineErrors errors("emissions");
  const std::size_t lines = ForEachLine(content, [&](std::size_t no,
                                                     std::string_view line) {
    try {
      const json j = ParseObject(line);
      const std::string id = IdField(j);
      const auto tokens = j.find("tokens");
      if (tokens == j.end() || !tokens->is_array()) {
        throw ValidationError("'tokens' must be an array");
      }
      EmissionMatrix em;
      for (const auto& tok : *tokens) {
        if (!tok.is_object()) throw ValidationError("token must be an object");
        const auto wi = tok.find("word_index");
        if (wi == tok.end()) throw ValidationError("token missing 'word_index'");
        const std::int64_t w = IntegerField(*wi, "word_index");
        if (w < 0) throw ValidationError("negative word_index");
        const auto sc = tok.find("scores");
        if (sc == tok.end() || !sc->is_array() || sc->size() != kNumLabels) {
          throw ValidationError("token 'scores' must be an array of 2 numbers");
        }
        LabelScores s{};
        for (std::size_t y = 0; y < kNumLabels; ++y) {
          if (!(*sc)[y].is_number()) {
            throw ValidationError("token 'scores' must be numbers");
          }
          s[y] = (*sc)[y].get<double>();
        }
        em.scores.push_back(s);
        em.word_index.push_back(static_cast<std::size_t>(w));
      }
      ValidateEmissions(em);
      if (!table.emplace(id, std::move(em)).second) {
        throw ValidationError("duplicate id '" + id + "'");
      }
    } catch (const json::exception& e) {
      errors.Add(no, std::string("malformed JSON: ") + e.what());
    } catch (const ValidationError& e) {
      errors.Add(no, e.what());
    }
  });
  errors.ThrowIfAny();
  if (lines == 0) throw ValidationError("emissions file is empty");
  return table;
}

EmissionTable LoadEmissions(const std::filesystem::path& path) {
  return ParseEmissions(ReadFile(path));
}

std::string SerializeEmissionRecord(std::string_view id,
                                    const EmissionMatrix& em) {
  ordered_json j;
  j["id"] = std::string(id);
  j["tokens"] = ordered_json::array();
  for (std::size_t t = 0; t < em.size(); ++t) {
    ordered_json tok;
    tok["word_index"] = em.word_index[t];
    tok["scores"] = {em.scores[t][0], em.scores[t][1]};
    j["tokens"].push_back(std::move(tok));
  }
  return j.dump() + "\n";
}

// ---- predictions -----------------------------------------------------------

std::vector<BoundaryPrediction> ParsePredictions(std::string_view content) {
  std::vector<BoundaryPrediction> preds;
  std::set<std::string> ids;
  LineErrors errors("predictions");
  const std::size_t lines = ForEachLine(content, [&](std::size_t no,
                                                     std::string_view line) {
    try {
      const json j = ParseObject(line);
      BoundaryPrediction p;
      p.id = IdField(j);
      const auto b = j.find("boundary");
      if (b == j.end()) throw ValidationError("missing field 'boundary'");
      const std::int64_t v = IntegerField(*b, "boundary");
      if (v < 0) throw ValidationError("negative boundary");
      p.boundary = static_cast<std::size_t>(v);
      if (!ids.insert(p.id).second) {
        throw ValidationError("duplicate id '" + p.id + "'");
      }
      preds.push_back(std::move(p));
    } catch (const json::exception& e) {
      errors.Add(no, std::string("malformed JSON: ") + e.what());
    } catch (const ValidationError& e) {
      errors.Add(no, e.what());
    }
  });
  errors.ThrowIfAny();
  if (lines == 0) throw ValidationError("predictions file is empty");
  return preds;
}

std::vector<BoundaryPrediction> LoadPredictions(
    const std::filesystem::path& path) {
  return ParsePredictions(ReadFile(path));
}

std::string SerializePredictions(std::span<const BoundaryPrediction> preds) {
  std::string out;
  for (const auto& p : preds) {
    ordered_json j;
    j["id"] = p.id;
    j["boundary"] = p.boundary;
    out += j.dump();
    out += '\n';
  }
  return out;
}

// ---- model -----------------------------------------------------------------

std::string SerializeModel(const Model& m) {
  if (m.emitter.weights.size() != m.emitter.dim ||
      m.emitter.dim != m.config.hash_dim ||
      m.emitter.hash_seed != m.config.hash_seed) {
    throw ValidationError("model emitter does not match its config");
  }
  ByteWriter w;
  w.Raw(kModelMagic, sizeof(kModelMagic));
  w.U32(kModelFormatVersion);
  w.U32(static_cast<std::uint32_t>(m.config.optimizer));
  w.F64(m.config.learning_rate);
  w.F64(m.config.lr_multiplier);
  w.F64(m.config.weight_decay);
  w.F64(m.config.dropout_rate);
  w.U32(m.config.epochs);
  w.U32(m.config.max_tokens);
  w.U64(m.config.seed);
  w.U64(m.emitter.hash_seed);
  w.U64(m.emitter.dim);
  for (double v : m.crf.start) w.F64(v);
  for (const auto& row : m.crf.transition) {
    for (double v : row) w.F64(v);
  }
  for (double v : m.crf.end) w.F64(v);
  for (const auto& row : m.emitter.weights) {
    w.F64(row[0]);
    w.F64(row[1]);
  }
  const std::uint64_t checksum = Fnv1a64(w.bytes());
  w.U64(checksum);
  return std::move(w.bytes());
}

Model DeserializeModel(std::string_view bytes) {
  if (bytes.size() < sizeof(kModelMagic) + 4) {
    throw ValidationError("truncated model file");
  }
  if (std::memcmp(bytes.data(), kModelMagic, sizeof(kModelMagic)) != 0) {
    throw ValidationError("not a bcrf model file (bad magic)");
  }
  ByteReader r(bytes.substr(sizeof(kModelMagic)));
  const std::uint32_t version = r.U32();
  if (version != kModelFormatVersion) {
    throw ValidationError("unsupported model format version " +
                          std::to_string(version) + " (this build reads version " +
                          std::to_string(kModelFormatVersion) + ")");
  }
  if (bytes.size() < kModelHeaderBytes + 8) {
    throw ValidationError("truncated model file");
  }
  Model m;
  m.config.optimizer = static_cast<Optimizer>(r.U32());
  m.config.learning_rate = r.F64();
  m.config.lr_multiplier = r.F64();
  m.config.weight_decay = r.F64();
  m.config.dropout_rate = r.F64();
  m.config.epochs = r.U32();
  m.config.max_tokens = r.U32();
  m.config.seed = r.U64();
  m.config.hash_seed = r.U64();
  m.config.hash_dim = r.U64();

  const std::uint64_t dim = m.config.hash_dim;
  if (dim == 0 || !std::has_single_bit(dim) || dim > (std::uint64_t{1} << 28)) {
    throw ValidationError("model file has invalid hash dimension " +
                          std::to_string(dim));
  }
  const std::uint64_t expected = kModelHeaderBytes + 16 * dim + 8;
  if (bytes.size() < expected) throw ValidationError("truncated model file");
  if (bytes.size() > expected) {
    throw ValidationError("model file has trailing bytes");
  }
  const std::size_t body = static_cast<std::size_t>(expected - 8);
  ByteReader tail(bytes.substr(body));
  if (tail.U64() != Fnv1a64(bytes.substr(0, body))) {
    throw ValidationError("model file checksum mismatch (file is corrupted)");
  }

  for (double& v : m.crf.start) v = r.F64();
  for (auto& row : m.crf.transition) {
    for (double& v : row) v = r.F64();
  }
  for (double& v : m.crf.end) v = r.F64();
  m.emitter.dim = static_cast<std::size_t>(dim);
  m.emitter.hash_seed = m.config.hash_seed;
  m.emitter.weights.resize(m.emitter.dim);
  for (auto& row : m.emitter.weights) {
    row[0] = r.F64();
    row[1] = r.F64();
    if (!std::isfinite(row[0]) || !std::isfinite(row[1])) {
      throw ValidationError("model file has non-finite emitter weights");
    }
  }
  ValidateParams(m.crf);
  ValidateConfig(m.config);
  return m;
}

void SaveModel(const std::filesystem::path& path, const Model& model) {
  WriteFile(path, SerializeModel(model));
}

Model LoadModel(const std::filesystem::path& path) {
  return DeserializeModel(ReadFile(path));
}

// ---- reports ---------------------------------------------------------------

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  throw ValidationError("unknown report format '" + std::string(name) + "'");
}

namespace {

ordered_json OptionalJson(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string RenderJson(const EvalResult& r) {
  ordered_json j;
  j["records"] = r.records;
  j["mae"] = r.mae;
  j["mare"] = r.mare;
  j["overall_sentence_accuracy"] = r.overall_sentence_accuracy;
  j["average_sentence_accuracy"] = r.average_sentence_accuracy;
  ordered_json placement;
  placement["mid_sentence_accuracy"] = OptionalJson(r.placement.mid_sentence);
  placement["end_of_sentence_accuracy"] =
      OptionalJson(r.placement.end_of_sentence);
  placement["mid_sentence_records"] = r.placement.mid_sentence_records;
  placement["end_of_sentence_records"] = r.placement.end_of_sentence_records;
  j["placement"] = std::move(placement);
  j["details"] = ordered_json::array();
  for (const auto& d : r.details) {
    ordered_json row;
    row["id"] = d.id;
    row["gold"] = d.gold;
    row["pred"] = d.pred;
    row["word_count"] = d.word_count;
    row["abs_error"] = d.gold > d.pred ? d.gold - d.pred : d.pred - d.gold;
    row["sentences_included"] = d.sentences.included;
    row["sentences_correct"] = d.sentences.correct;
    row["placement"] = PlacementName(d.placement);
    j["details"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string RenderCsv(const EvalResult& r) {
  auto opt = [](const std::optional<double>& v) {
    return v ? FormatDouble(*v) : std::string();
  };
  std::string out = "metric,value\n";
  out += "records," + std::to_string(r.records) + "\n";
  out += "mae," + FormatDouble(r.mae) + "\n";
  out += "mare," + FormatDouble(r.mare) + "\n";
  out += "overall_sentence_accuracy," +
         FormatDouble(r.overall_sentence_accuracy) + "\n";
  out += "average_sentence_accuracy," +
         FormatDouble(r.average_sentence_accuracy) + "\n";
  out += "mid_sentence_accuracy," + opt(r.placement.mid_sentence) + "\n";
  out += "end_of_sentence_accuracy," + opt(r.placement.end_of_sentence) + "\n";
  out += "mid_sentence_records," +
         std::to_string(r.placement.mid_sentence_records) + "\n";
  out += "end_of_sentence_records," +
         std::to_string(r.placement.end_of_sentence_records) + "\n";
  out += "\nid,gold,pred,word_count,abs_error,sentences_included,"
         "sentences_correct,placement\n";
  for (const auto& d : r.details) {
    const std::size_t err = d.gold > d.pred ? d.gold - d.pred : d.pred - d.gold;
    out += CsvField(d.id) + "," + std::to_string(d.gold) + "," +
           std::to_string(d.pred) + "," + std::to_string(d.word_count) + "," +
           std::to_string(err) + "," + std::to_string(d.sentences.included) +
           "," + std::to_string(d.sentences.correct) + "," +
           PlacementName(d.placement) + "\n";
  }
  return out;
}

std::string RenderMarkdown(const EvalResult& r) {
  auto opt = [](const std::optional<double>& v) {
    return v ? FormatFixed(*v, 4) : std::string("n/a");
  };
  std::string out = "# Boundary detection report\n\n";
  out += "Records: " + std::to_string(r.records) + "\n\n";
  out += "## Word-level boundary error\n\n";
  out += "| MAE | MARE |\n|---:|---:|\n";
  out += "| " + FormatFixed(r.mae, 4) + " | " + FormatFixed(r.mare, 4) + " |\n\n";
  out += "## Sentence-level accuracy\n\n";
  out += "| Accuracy | Avg. Acc. |\n|---:|---:|\n";
  out += "| " + FormatFixed(r.overall_sentence_accuracy, 4) + " | " +
         FormatFixed(r.average_sentence_accuracy, 4) + " |\n\n";
  out += "## Accuracy by boundary placement\n\n";
  out += "| mid sent. | end of sent. |\n|---:|---:|\n";
  out += "| " + opt(r.placement.mid_sentence) + " (" +
         std::to_string(r.placement.mid_sentence_records) + " texts) | " +
         opt(r.placement.end_of_sentence) + " (" +
         std::to_string(r.placement.end_of_sentence_records) + " texts) |\n";
  return out;
}

}  // namespace

std::string RenderReport(const EvalResult& result, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson:
      return RenderJson(result);
    case ReportFormat::kCsv:
      return RenderCsv(result);
    case ReportFormat::kMarkdown:
      return RenderMarkdown(result);
  }
  throw ValidationError("unknown report format");
}

std::string RenderPosPairCsv(std::span<const PosPairRow> rows) {
  std::string out = "pre,post,count,median_abs_error\n";
  for (const auto& row : rows) {
    out += std::string(PosTagName(row.pre)) + "," + PosTagName(row.post) + "," +
           std::to_string(row.count) + "," +
           (row.median_abs_error ? FormatDouble(*row.median_abs_error) : "") +
           "\n";
  }
  return out;
}

std::string RenderPosDistributionCsv(const PosCounts& counts) {
  std::size_t human_total = 0, machine_total = 0;
  for (std::size_t i = 0; i < kNumWordTags; ++i) {
    human_total += counts.human[i];
    machine_total += counts.machine[i];
  }
  auto share = [](std::size_t n, std::size_t total) {
    return total == 0 ? std::string()
                      : FormatDouble(static_cast<double>(n) /
                                     static_cast<double>(total));
  };
  std::string out = "tag,human_count,machine_count,human_share,machine_share\n";
  for (std::size_t i = 0; i < kNumWordTags; ++i) {
    out += std::string(PosTagName(static_cast<PosTag>(i))) + "," +
           std::to_string(counts.human[i]) + "," +
           std::to_string(counts.machine[i]) + "," +
           share(counts.human[i], human_total) + "," +
           share(counts.machine[i], machine_total) + "\n";
  }
  return out;
}

std::string RenderHistogramCsv(std::span<const std::size_t> counts) {
  std::string out = "bin,lower,upper,count\n";
  const double n = static_cast<double>(counts.size());
  for (std::size_t b = 0; b < counts.size(); ++b) {
    out += std::to_string(b) + "," + FormatDouble(static_cast<double>(b) / n) +
           "," + FormatDouble(static_cast<double>(b + 1) / n) + "," +
           std::to_string(counts[b]) + "\n";
  }
  return out;
}

// ---- format descriptions -----------------------------------------------------

std::string DatasetFormatSpec() {
  return R"(Dataset file (JSON lines, UTF-8)

One JSON object per line; blank lines are ignored.

  id         string (integers are accepted and converted to strings)
  text       string; words are maximal runs of non-whitespace characters,
             using the same whitespace set as Python's str.split()
  label      integer; index of the first machine-generated word.
             0 = fully machine, word_count = fully human.
             With --label-convention last-human the stored value is the
             index of the last human word and 1 is added on load.
             Optional only for `predict` inputs.
  pos_tags   optional array of strings, one per word; overrides the
             built-in tagger in `analyze` (universal or Penn tags)
  source     optional string
  generator  optional string

Example:
  {"id":"1","text":"I wrote this. A model wrote this.","label":3}
)";
}

std::string EmissionsFormatSpec() {
  return R"(Emissions file (JSON lines, UTF-8)

One JSON object per line, one per dataset record; ids must be unique.

  id      string, matching the dataset id
  tokens  non-empty array of {"word_index": int, "scores": [human, machine]}
          word_index starts at 0 and increases by 0 or 1 per token; it must
          stay below the record's word count. Tokens may cover only a
          prefix of the words (truncation); uncovered words take the label
          of the last covered word. Scores are finite real numbers (logits
          or any unnormalized per-label scores).

A word is labeled machine if any of its tokens is.

Example:
  {"id":"1","tokens":[{"word_index":0,"scores":[2.1,-1.3]},
                      {"word_index":0,"scores":[1.7,-0.2]},
                      {"word_index":1,"scores":[-0.5,3.0]}]}
)";
}

std::string ModelFormatSpec() {
  return R"(Model file (binary, little-endian, version 1)

  offset  size  field
  0       8     magic "BCRFMODL"
  8       4     u32 format version (1)
  12      4     u32 optimizer (0 = Adam)
  16      8     f64 learning_rate
  24      8     f64 lr_multiplier
  32      8     f64 weight_decay
  40      8     f64 dropout_rate
  48      4     u32 epochs
  52      4     u32 max_tokens (0 = unlimited)
  56      8     u64 training seed
  64      8     u64 feature hash seed
  72      8     u64 hash dimension D (power of two)
  80      64    f64[8] CRF: start[human], start[machine],
                transition[h][h], transition[h][m], transition[m][h],
                transition[m][m], end[human], end[machine]
  144     16*D  f64[D][2] emitter weights, row-major (feature, label)
  144+16D 8     u64 FNV-1a 64 checksum of all preceding bytes

Readers reject other versions, size mismatches and checksum failures.
)";
}

std::string PredictionsFormatSpec() {
  return R"(Predictions file (JSON lines, UTF-8)

One JSON object per line, in dataset order; ids must be unique.

  id        string, matching the dataset id
  boundary  integer; predicted index of the first machine-generated word
            (0 = fully machine, word_count = fully human)

Example:
  {"id":"1","boundary":3}
)";
}

}  // namespace bcrf
