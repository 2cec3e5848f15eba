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

#ifndef DEEDSCAN_SUBDIV_H_
#define DEEDSCAN_SUBDIV_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "deedscan/corpus.h"
#include "deedscan/gazetteer.h"

namespace deedscan {

// Variant -> canonical word table used when normalizing subdivision names,
// e.g. "add'n" -> "addition", "no." -> "number", "1st" -> "first". Keys are
// stored in normalized form. A canonical word may not itself be a variant,
// which keeps normalization idempotent.
class AbbreviationTable {
 public:
  AbbreviationTable() = default;

  static const AbbreviationTable &Default();

  // Two tab- or whitespace-separated columns: variant, canonical. '#'
  // starts a comment.
  static AbbreviationTable Parse(std::istream &in, std::string_view name);
  static AbbreviationTable Load(const std::filesystem::path &path);

  void Add(std::string_view variant, std::string_view canonical);

  // The canonical form of word, or word itself.
  const std::string &Expand(const std::string &word) const;

  size_t size() const { return table_.size(); }

 private:
  std::unordered_map<std::string, std::string> table_;
};

// Lowercases, splits on whitespace and hyphens, strips punctuation,
// expands abbreviations and joins the words with single spaces.
std::string NormalizeSubdivision(
    std::string_view name,
    const AbbreviationTable &table = AbbreviationTable::Default());

// Jaccard overlap of the word sets, blended 50/50 with normalized edit
// similarity of the canonical strings. Inputs must already be normalized.
double BlendedSimilarity(std::string_view a, std::string_view b);

struct SubdivisionMatch {
  // Index into Gazetteer::records().
  size_t record = 0;
  std::string canonical_name;
  double similarity = 0;
  bool accepted = false;
};

struct SubdivisionHit {
  Span span;
  size_t first_token = 0;
  size_t token_count = 0;
  SubdivisionMatch match;
};

class SubdivisionMatcher {
 public:
  static constexpr double kDefaultThreshold = 0.85;

  SubdivisionMatcher(const Gazetteer &gazetteer,
                     const AbbreviationTable &abbreviations,
                     double threshold = kDefaultThreshold);

  double threshold() const { return threshold_; }
  const AbbreviationTable &abbreviations() const { return *abbreviations_; }

  // Best gazetteer subdivision for a name; ties go to the shorter canonical
  // name, then the lexicographically smaller one. Empty when the gazetteer
  // has no subdivisions.
  std::optional<SubdivisionMatch> Match(std::string_view name) const;

  // Accepted, non-overlapping subdivision mentions in a document. Token
  // windows are tried where the first word equals the first word of some
  // gazetteer name.
  std::vector<SubdivisionHit> FindInDocument(const Document &doc) const;

 private:
  struct Candidate {
    size_t record;
    std::string canonical;
    size_t words;
  };

  bool Better(const SubdivisionMatch &a, const SubdivisionMatch &b) const;

  const Gazetteer *gazetteer_;
  const AbbreviationTable *abbreviations_;
  double threshold_;
  std::vector<Candidate> candidates_;
  std::unordered_map<std::string, std::vector<size_t>> by_first_word_;
  size_t max_words_ = 0;
};

}  // namespace deedscan

#endif  // DEEDSCAN_SUBDIV_H_
