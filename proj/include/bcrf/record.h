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

#ifndef BCRF_RECORD_H_
#define BCRF_RECORD_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bcrf {

// One dataset item. `label` is the index of the first machine-generated
// whitespace word; it is absent only in unlabeled prediction inputs.
struct TextRecord {
  std::string id;
  std::string text;
  std::optional<std::size_t> label;
  std::optional<std::vector<std::string>> pos_tags;
  std::optional<std::string> source;
  std::optional<std::string> generator;

  bool operator==(const TextRecord&) const = default;
};

struct BoundaryPrediction {
  std::string id;
  std::size_t boundary = 0;

  bool operator==(const BoundaryPrediction&) const = default;
};

}  // namespace bcrf

#endif  // BCRF_RECORD_H_
