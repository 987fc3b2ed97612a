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

// Small UTF-8 helpers shared by the word splitter, sentence splitter and
// POS tagger. Malformed bytes decode to one code point each (the byte value)
// so every function is total over arbitrary input.

#ifndef BCRF_TEXT_H_
#define BCRF_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bcrf::text {

struct CodePoint {
  char32_t value;
  std::string_view bytes;
};

std::vector<CodePoint> Decode(std::string_view s);

// Same set Python's str.split() treats as whitespace, so external tools that
// split with str.split() agree on word indices.
bool IsWhitespace(char32_t c);

// ASCII punctuation plus common Unicode quotes, dashes and ellipsis.
bool IsPunctuation(char32_t c);

bool IsQuoteOrBracket(char32_t c);

// ASCII-only case folding; other bytes are copied unchanged.
std::string AsciiLower(std::string_view s);

}  // namespace bcrf::text

#endif  // BCRF_TEXT_H_
