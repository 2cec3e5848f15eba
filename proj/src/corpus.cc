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

#include "deedscan/corpus.h"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "deedscan/jsonl.h"
#include "deedscan/text.h"

namespace deedscan {

std::vector<Token> Tokenize(std::string_view text) {
  std::u32string chars = DecodeUtf8(text);
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < chars.size()) {
    while (i < chars.size() && IsSpace(chars[i])) ++i;
    size_t start = i;
    while (i < chars.size() && !IsSpace(chars[i])) ++i;
    if (i == start) break;
    std::u32string_view piece = std::u32string_view(chars).substr(start, i - start);
    size_t core_start = start, core_end = i;
    while (core_start < core_end && !IsAlnum(chars[core_start])) ++core_start;
    while (core_end > core_start && !IsAlnum(chars[core_end - 1])) --core_end;
    if (core_start == core_end) {
      core_start = start, core_end = i;
    } else if (core_start > start && chars[core_start - 1] == U'(' && core_end < i &&
               chars[core_end] == U')') {
      // Keep a bracketed numeral such as "(8)," whole.
      --core_start, ++core_end;
    }
    tokens.push_back({start, i, EncodeUtf8(piece), EncodeUtf8(NormalizeWord(piece)),
                      core_start, core_end});
  }
  return tokens;
}

Span CoreSpan(const std::vector<Token> &tokens, size_t first, size_t last) {
  return {tokens[first].core_start, tokens[last].core_end};
}

Document::Document(std::string id, std::string text)
    : id_(std::move(id)), text_(std::move(text)), chars_(DecodeUtf8(text_)) {
  tokens_ = Tokenize(text_);
}

std::string Document::Slice(size_t start, size_t end) const {
  start = std::min(start, chars_.size());
  end = std::clamp(end, start, chars_.size());
  return EncodeUtf8(std::u32string_view(chars_).substr(start, end - start));
}

size_t Document::TokenAt(size_t offset) const {
  auto it = std::upper_bound(
      tokens_.begin(), tokens_.end(), offset,
      [](size_t off, const Token &token) { return off < token.end; });
  return static_cast<size_t>(it - tokens_.begin());
}

std::vector<Document> LoadCorpus(std::istream &in, std::string_view name) {
  std::vector<Document> docs;
  std::unordered_set<std::string> seen;
  ForEachJsonLine(in, name, [&](size_t, const Json &record) {
    std::string id = RequireString(record, "id");
    std::string text = RequireString(record, "text");
    if (!seen.insert(id).second) throw Error("duplicate document id '" + id + "'");
    docs.emplace_back(std::move(id), std::move(text));
  });
  return docs;
}

std::vector<Document> LoadCorpus(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus " + path.string());
  return LoadCorpus(in, path.string());
}

void WriteCorpus(const std::vector<Document> &docs, std::ostream &out) {
  for (const Document &doc : docs) {
    out << Json{{"id", doc.id()}, {"text", doc.text()}}.dump() << '\n';
  }
}

std::vector<Span> ParseSpanList(const Json &spans) {
  if (!spans.is_array()) throw Error("span list must be an array");
  std::vector<Span> out;
  for (const Json &span : spans) {
    if (!span.is_array() || span.size() != 2 || !span[0].is_number_unsigned() ||
        !span[1].is_number_unsigned()) {
      throw Error("span must be a [start, end] pair of non-negative integers");
    }
    Span s{span[0].get<size_t>(), span[1].get<size_t>()};
    if (s.start >= s.end) {
      throw Error("span [" + std::to_string(s.start) + "," +
                  std::to_string(s.end) + "] has start >= end");
    }
    out.push_back(s);
  }
  return out;
}

std::string EntityValueString(const Json &value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  if (value.is_null()) return "";
  throw Error("entity value must be a string or integer");
}

GoldEntity ParseEntityRecord(const Json &record) {
  GoldEntity entity;
  std::string cls = RequireString(record, "class");
  auto parsed = ParseEntityClass(cls);
  if (!parsed) throw Error("unknown entity class '" + cls + "'");
  entity.cls = *parsed;
  entity.span = {RequireField(record, "start").get<size_t>(),
                 RequireField(record, "end").get<size_t>()};
  if (entity.span.start >= entity.span.end) {
    throw Error("entity span has start >= end");
  }
  entity.value = EntityValueString(record.value("value", Json()));
  return entity;
}

std::vector<GoldAnnotation> LoadGold(std::istream &in, std::string_view name) {
  std::vector<GoldAnnotation> gold;
  ForEachJsonLine(in, name, [&](size_t, const Json &record) {
    GoldAnnotation ann;
    ann.doc_id = RequireString(record, "id");
    try {
      if (record.contains("term_spans")) {
        ann.term_spans = ParseSpanList(record["term_spans"]);
      }
      if (record.contains("doc_flag")) {
        if (!record["doc_flag"].is_boolean()) {
          throw Error("field 'doc_flag' must be a boolean");
        }
        ann.doc_flag = record["doc_flag"].get<bool>();
        if (!ann.doc_flag && !ann.term_spans.empty()) {
          throw Error("doc_flag is false but term_spans is non-empty");
        }
      } else {
        ann.doc_flag = !ann.term_spans.empty();
      }
      if (record.contains("entities")) {
        for (const Json &e : record["entities"]) {
          ann.entities.push_back(ParseEntityRecord(e));
        }
      }
      if (record.contains("parcels") && !record["parcels"].is_null()) {
        try {
          ann.parcels = ParseGeoJsonGeometry(record["parcels"]);
        } catch (const Error &e) {
          throw Error(std::string("malformed parcel geometry: ") + e.what());
        }
      }
    } catch (const Error &e) {
      throw Error("document '" + ann.doc_id + "': " + e.what());
    }
    gold.push_back(std::move(ann));
  });
  return gold;
}

std::vector<GoldAnnotation> LoadGold(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open gold file " + path.string());
  return LoadGold(in, path.string());
}

}  // namespace deedscan
