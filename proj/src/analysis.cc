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

#include "bcrf/analysis.h"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "bcrf/error.h"
#include "bcrf/text.h"

namespace bcrf {
namespace {

const std::unordered_map<std::string_view, PosTag>& Lexicon() {
  static const auto* lexicon = [] {
    auto* m = new std::unordered_map<std::string_view, PosTag>;
    auto add = [m](PosTag tag, std::initializer_list<std::string_view> words) {
      for (auto w : words) m->emplace(w, tag);
    };
    add(PosTag::kDet, {"the", "a", "an", "this", "that", "these", "those",
                       "every", "each", "some", "any", "no", "all", "both",
                       "either", "neither", "another", "such", "which",
                       "whose", "what"});
    add(PosTag::kPron, {"i", "you", "he", "she", "it", "we", "they", "me",
                        "him", "her", "us", "them", "my", "your", "his",
                        "its", "our", "their", "mine", "yours", "hers",
                        "ours", "theirs", "myself", "yourself", "himself",
                        "herself", "itself", "ourselves", "themselves", "who",
                        "whom", "someone", "something", "anyone", "anything",
                        "everyone", "everything", "nobody", "nothing"});
    add(PosTag::kAdp, {"of", "in", "on", "at", "by", "for", "with", "from",
                       "into", "onto", "about", "over", "under", "between",
                       "through", "during", "before", "after", "above",
                       "below", "against", "among", "within", "without",
                       "across", "toward", "towards", "upon", "via", "per",
                       "than", "like", "since", "until", "despite"});
    add(PosTag::kConj, {"and", "or", "but", "nor", "yet", "so", "because",
                        "although", "though", "while", "whereas", "if",
                        "unless", "whether"});
    add(PosTag::kPrt, {"to", "not", "n't", "'s", "up", "out", "off"});
    add(PosTag::kVerb, {"is", "are", "was", "were", "be", "been", "being",
                        "am", "has", "have", "had", "do", "does", "did",
                        "will", "would", "shall", "should", "can", "could",
                        "may", "might", "must"});
    add(PosTag::kAdv, {"very", "also", "too", "just", "then", "now", "here",
                       "there", "often", "never", "always", "however",
                       "thus", "still", "again", "even", "well", "almost"});
    return m;
  }();
  return *lexicon;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

PosTag TagWord(const std::string& word) {
  const auto cps = text::Decode(word);
  std::size_t lo = 0, hi = cps.size();
  while (lo < hi && text::IsPunctuation(cps[lo].value)) ++lo;
  while (hi > lo && text::IsPunctuation(cps[hi - 1].value)) --hi;
  if (lo == hi) return PosTag::kPunct;

  std::string core;
  bool digit = false, numeric = true;
  for (std::size_t i = lo; i < hi; ++i) {
    core.append(cps[i].bytes);
    const char32_t c = cps[i].value;
    if (c >= U'0' && c <= U'9') {
      digit = true;
    } else if (c != U'.' && c != U',') {
      numeric = false;
    }
  }
  if (digit && numeric) return PosTag::kNum;

  const std::string lower = text::AsciiLower(core);
  const auto& lex = Lexicon();
  if (auto it = lex.find(lower); it != lex.end()) return it->second;
  // "'s" and "n't" lose their apostrophe when stripped.
  if (auto it = lex.find(text::AsciiLower(word)); it != lex.end()) {
    return it->second;
  }

  if (lower.size() >= 4) {
    if (EndsWith(lower, "ly")) return PosTag::kAdv;
    for (auto suf : {"ing", "ed", "ize", "ate"}) {
      if (EndsWith(lower, suf)) return PosTag::kVerb;
    }
    for (auto suf : {"ous", "ful", "ive", "able", "al"}) {
      if (EndsWith(lower, suf)) return PosTag::kAdj;
    }
  }
  return PosTag::kNoun;
}

void CheckAligned(std::span<const std::string> words,
                  std::span<const PosTag> tags, std::size_t boundary) {
  if (words.size() != tags.size()) {
    throw ValidationError("have " + std::to_string(tags.size()) +
                          " POS tags for " + std::to_string(words.size()) +
                          " words");
  }
  if (boundary > words.size()) {
    throw ValidationError("boundary " + std::to_string(boundary) +
                          " exceeds word count " + std::to_string(words.size()));
  }
}

std::optional<PosShares> Shares(std::span<const PosTag> tags) {
  if (tags.empty()) return std::nullopt;
  std::array<std::size_t, kNumWordTags> counts{};
  for (PosTag t : tags) {
    const auto i = static_cast<std::size_t>(t);
    if (i >= kNumWordTags) throw ValidationError("sentinel tag on a word");
    ++counts[i];
  }
  PosShares out;
  out.words = tags.size();
  for (std::size_t i = 0; i < kNumWordTags; ++i) {
    out.share[i] = static_cast<double>(counts[i]) / static_cast<double>(tags.size());
  }
  return out;
}

}  // namespace

const char* PosTagName(PosTag tag) {
  static constexpr const char* kNames[] = {
      "NOUN", "VERB", "ADJ",  "ADV",   "PRON", "DET", "ADP",
      "NUM",  "CONJ", "PRT",  "PUNCT", "X",    "BOS", "EOS"};
  return kNames[static_cast<std::size_t>(tag)];
}

PosTag PosTagFromString(std::string_view name) {
  std::string up(name);
  for (char& c : up) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  for (std::size_t i = 0; i < kNumWordTags; ++i) {
    if (up == PosTagName(static_cast<PosTag>(i))) return static_cast<PosTag>(i);
  }
  // Universal Dependencies names that differ from the coarse set.
  if (up == "PROPN") return PosTag::kNoun;
  if (up == "AUX") return PosTag::kVerb;
  if (up == "CCONJ" || up == "SCONJ") return PosTag::kConj;
  if (up == "PART") return PosTag::kPrt;
  if (up == "SYM") return PosTag::kPunct;
  if (up == "INTJ") return PosTag::kX;
  // Penn Treebank.
  auto starts = [&up](std::string_view p) { return up.rfind(p, 0) == 0; };
  if (starts("NN")) return PosTag::kNoun;
  if (starts("VB") || up == "MD") return PosTag::kVerb;
  if (starts("JJ")) return PosTag::kAdj;
  if (starts("RB") || up == "WRB") return PosTag::kAdv;
  if (starts("PRP") || starts("WP") || up == "EX") return PosTag::kPron;
  if (up == "DT" || up == "PDT" || up == "WDT") return PosTag::kDet;
  if (up == "IN") return PosTag::kAdp;
  if (up == "CD") return PosTag::kNum;
  if (up == "CC") return PosTag::kConj;
  if (up == "RP" || up == "TO" || up == "POS") return PosTag::kPrt;
  if (!up.empty() && std::all_of(up.begin(), up.end(), [](char c) {
        return std::string_view(".,:;!?'\"`()[]{}-$#").find(c) !=
               std::string_view::npos;
      })) {
    return PosTag::kPunct;
  }
  return PosTag::kX;
}

std::vector<PosTag> PosTagWords(std::span<const std::string> words) {
  std::vector<PosTag> tags;
  tags.reserve(words.size());
  for (const auto& w : words) tags.push_back(TagWord(w));
  return tags;
}

PosPair BoundaryPosPair(std::span<const std::string> words,
                        std::span<const PosTag> tags,
                        std::size_t gold_boundary) {
  CheckAligned(words, tags, gold_boundary);
  PosPair p;
  p.pre = gold_boundary == 0 ? PosTag::kBos : tags[gold_boundary - 1];
  p.post = gold_boundary == tags.size() ? PosTag::kEos : tags[gold_boundary];
  return p;
}

double Median(std::vector<double> values) {
  if (values.empty()) throw ValidationError("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::vector<PosPairRow> PosPairTable(
    std::span<const PosPairObservation> observations) {
  struct Group {
    std::size_t count = 0;
    std::vector<double> errors;
  };
  std::map<std::pair<PosTag, PosTag>, Group> groups;
  for (const auto& obs : observations) {
    Group& g = groups[{obs.pair.pre, obs.pair.post}];
    ++g.count;
    if (obs.abs_error) g.errors.push_back(*obs.abs_error);
  }
  std::vector<PosPairRow> rows;
  rows.reserve(groups.size());
  for (auto& [key, g] : groups) {
    PosPairRow row{key.first, key.second, g.count, std::nullopt};
    if (!g.errors.empty()) row.median_abs_error = Median(std::move(g.errors));
    rows.push_back(row);
  }
  return rows;
}

PosDistribution PosDistributionAt(std::span<const std::string> words,
                                  std::span<const PosTag> tags,
                                  std::size_t gold_boundary) {
  CheckAligned(words, tags, gold_boundary);
  return {Shares(tags.first(gold_boundary)), Shares(tags.subspan(gold_boundary))};
}

void PosCounts::Add(std::span<const PosTag> tags, std::size_t gold_boundary) {
  if (gold_boundary > tags.size()) {
    throw ValidationError("boundary exceeds tag count");
  }
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const auto t = static_cast<std::size_t>(tags[i]);
    if (t >= kNumWordTags) throw ValidationError("sentinel tag on a word");
    ++(i < gold_boundary ? human : machine)[t];
  }
}

std::vector<std::size_t> BoundaryLocationHistogram(
    std::span<const LocationRecord> records, std::size_t bins) {
  if (bins == 0) throw ValidationError("histogram needs at least one bin");
  std::vector<std::size_t> counts(bins, 0);
  for (const auto& r : records) {
    if (r.word_count == 0 || r.boundary > r.word_count) {
      throw ValidationError("invalid boundary location record");
    }
    // Integer floor(bins * boundary / word_count) avoids rounding at edges.
    const std::size_t bin =
        std::min(bins - 1, r.boundary * bins / r.word_count);
    ++counts[bin];
  }
  return counts;
}

}  // namespace bcrf
