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

#ifndef DEEDSCAN_TEXT_H_
#define DEEDSCAN_TEXT_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace deedscan {

// Error raised for malformed input files and invalid configuration.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// UTF-8 conversion. Invalid byte sequences decode to U+FFFD so that decoding
// is total.
std::u32string DecodeUtf8(std::string_view utf8);
std::string EncodeUtf8(std::u32string_view text);

// Character classes used by the tokenizer.
bool IsSpace(char32_t c);
bool IsLetter(char32_t c);
bool IsDigit(char32_t c);
inline bool IsAlnum(char32_t c) { return IsLetter(c) || IsDigit(c); }

// Simple one-to-one lowercase mapping (ASCII, Latin-1, Latin Extended-A,
// basic Greek and Cyrillic).
char32_t ToLower(char32_t c);

// Normalized form of a single word: lowercased, characters other than
// letters and digits removed, hyphens kept when they sit between two
// retained characters.
std::u32string NormalizeWord(std::u32string_view word);
std::string NormalizeWord(std::string_view word);

// Lowercases and splits on whitespace, normalizing each piece and dropping
// pieces that normalize to nothing.
std::vector<std::string> NormalizedWords(std::string_view text);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

}  // namespace deedscan

#endif  // DEEDSCAN_TEXT_H_
