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

#ifndef DEEDSCAN_CORPUS_H_
#define DEEDSCAN_CORPUS_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "deedscan/entity.h"
#include "deedscan/geometry.h"

namespace deedscan {

// A whitespace-delimited token. Offsets are in Unicode scalar values and
// always refer to the original text; `normalized` is the lowercased form
// with surrounding punctuation removed (see NormalizeWord). The core span
// excludes that punctuation and is what mention spans are built from.
struct Token {
  size_t start = 0;
  size_t end = 0;
  std::string surface;
  std::string normalized;
  size_t core_start = 0;
  size_t core_end = 0;

  Span span() const { return {start, end}; }
  Span core() const { return {core_start, core_end}; }
  bool operator==(const Token &) const = default;
};

std::vector<Token> Tokenize(std::string_view text);

// Core span from the first through the last of `tokens[first..last]`.
Span CoreSpan(const std::vector<Token> &tokens, size_t first, size_t last);

// One deed page. Immutable after construction.
class Document {
 public:
  Document(std::string id, std::string text);

  const std::string &id() const { return id_; }
  const std::string &text() const { return text_; }
  const std::u32string &chars() const { return chars_; }
  const std::vector<Token> &tokens() const { return tokens_; }

  // Length in Unicode scalar values.
  size_t length() const { return chars_.size(); }

  // UTF-8 text of the character range [start, end).
  std::string Slice(size_t start, size_t end) const;
  std::string Slice(Span span) const { return Slice(span.start, span.end); }

  // Index of the first token whose end is after offset, or tokens().size().
  size_t TokenAt(size_t offset) const;

 private:
  std::string id_;
  std::string text_;
  std::u32string chars_;
  std::vector<Token> tokens_;
};

std::vector<Document> LoadCorpus(std::istream &in, std::string_view name);
std::vector<Document> LoadCorpus(const std::filesystem::path &path);
void WriteCorpus(const std::vector<Document> &docs, std::ostream &out);

struct GoldEntity {
  EntityClass cls = EntityClass::kState;
  Span span;
  std::string value;
};

struct GoldAnnotation {
  std::string doc_id;
  std::vector<Span> term_spans;
  bool doc_flag = false;
  std::vector<GoldEntity> entities;
  // Zero or more parcel polygons; multiple parcels are a union.
  MultiPolygon parcels;
};

// Span bounds are checked against document text only at evaluation time.
std::vector<GoldAnnotation> LoadGold(std::istream &in, std::string_view name);
std::vector<GoldAnnotation> LoadGold(const std::filesystem::path &path);

// Parses a [[start, end], ...] array, requiring start < end.
std::vector<Span> ParseSpanList(const Json &spans);

// Entity values in interchange records may be strings or integers.
std::string EntityValueString(const Json &value);

// {class, start, end, value}
GoldEntity ParseEntityRecord(const Json &record);

}  // namespace deedscan

#endif  // DEEDSCAN_CORPUS_H_
