// Copyright 2026 The Deedscan Authors.
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

#ifndef DEEDSCAN_NUMERALS_H_
#define DEEDSCAN_NUMERALS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deedscan/entity.h"

namespace deedscan {

// English cardinal and ordinal numerals in [0, 99999], as written in deeds:
// "106", "one hundred and six", "twenty-five", "twenty-fifth", "25th", and
// word forms confirmed by a following Arabic value ("eight (8)").

inline constexpr int kMaxNumeral = 99999;

enum class NumeralForm { kArabic, kWords, kMixed };

const char *NumeralFormName(NumeralForm form);

struct NumeralParse {
  int value = 0;
  NumeralForm form = NumeralForm::kArabic;
  // Set when a confirming Arabic value disagrees with the words. The Arabic
  // value wins.
  bool conflict = false;
  size_t token_count = 0;
  // Filled in by callers that parse from a document.
  Span source_span;
};

// Parses a run of normalized tokens that must be consumed entirely.
std::optional<NumeralParse> ParseNumeral(std::span<const std::string> tokens);

// Parses the longest numeral at the front of the run.
std::optional<NumeralParse> ParseNumeralPrefix(
    std::span<const std::string> tokens);

// Digits with an optional ordinal suffix ("25", "25th"), within range.
std::optional<int> ParseArabic(std::string_view token);

// Canonical words for n: 106 -> {"one", "hundred", "six"}, 36 ->
// {"thirty-six"}. Throws Error when n is outside [0, 99999].
std::vector<std::string> RenderNumeral(int n);

// Maps OCR look-alikes ('l' and 'i' to '1', 'o' to '0') in a token that
// already contains a digit and consists only of digits and look-alikes.
// Other tokens are returned unchanged.
std::string RepairOcrDigits(std::string_view token);

}  // namespace deedscan

#endif  // DEEDSCAN_NUMERALS_H_
