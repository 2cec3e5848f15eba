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

#ifndef DEEDSCAN_DETECTOR_H_
#define DEEDSCAN_DETECTOR_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deedscan/corpus.h"
#include "deedscan/jsonl.h"

namespace deedscan {

struct LexiconEntry {
  std::string entry_id;
  // Normalized words, at least one.
  std::vector<std::string> phrase;
  std::string category;
  std::optional<double> min_similarity;

  // phrase decoded to code points, for matching.
  std::vector<std::u32string> phrase_chars;
};

class Lexicon {
 public:
  Lexicon() = default;

  // Lines are "phrase<TAB>category[<TAB>min_similarity]"; '#' starts a
  // comment. The category defaults to "term". Entry ids are the normalized
  // phrase joined with single spaces. Throws on an empty lexicon or a
  // duplicate phrase.
  static Lexicon Parse(std::istream &in, std::string_view name);
  static Lexicon Load(const std::filesystem::path &path);

  void Add(LexiconEntry entry);

  const std::vector<LexiconEntry> &entries() const { return entries_; }
  size_t max_phrase_length() const { return max_phrase_length_; }
  const LexiconEntry *Find(std::string_view entry_id) const;

 private:
  std::vector<LexiconEntry> entries_;
  size_t max_phrase_length_ = 0;
};

enum class MatchKind { kExact, kFuzzy };

const char *MatchKindName(MatchKind kind);

struct TermMatch {
  std::string entry_id;
  Span span;
  size_t first_token = 0;
  size_t token_count = 0;
  MatchKind kind = MatchKind::kExact;
  // Minimum per-word similarity over the phrase.
  double similarity = 1.0;
  double context_score = 1.0;
  bool accepted = false;
  // Similarity threshold that applied to this entry.
  double threshold = 0.0;
};

enum class ContextEffect { kSuppress, kBoost };

struct ContextRule {
  std::string rule_id;
  // Lexicon entry id, lexicon category, or "*" for every match.
  std::string trigger;
  size_t window = 1;
  std::vector<std::string> cue_words;
  ContextEffect effect = ContextEffect::kSuppress;
  double weight = 1.0;
};

// Line-delimited records {rule_id, trigger, window, cue_words, effect,
// weight}.
std::vector<ContextRule> ParseContextRules(std::istream &in,
                                           std::string_view name);
std::vector<ContextRule> LoadContextRules(const std::filesystem::path &path);

struct DetectorConfig {
  double similarity_threshold = 0.8;
  // Lexicon words shorter than this many characters only match exactly.
  size_t min_fuzzy_length = 4;
  double context_threshold = 0.5;
};

// Finds lexicon phrases in the token stream. Every word of a phrase must
// clear the entry's threshold, which is the larger of the configured
// threshold and the entry's own minimum. Overlapping candidates are
// resolved greedily by similarity (so exact beats fuzzy), then by token
// length, then leftmost. Returned matches are ordered by position and do
// not overlap.
std::vector<TermMatch> MatchTerms(const Document &doc, const Lexicon &lexicon,
                                  const DetectorConfig &config);

// Scores each match against the rules whose trigger names its entry or
// category. A suppress rule with a cue word within `window` tokens of the
// match multiplies the score by (1 - weight); boost rules then move it
// toward 1 by `weight` of the remaining gap, unless the score is already
// 0 (a full-weight suppression is final). Recomputes `accepted`.
std::vector<TermMatch> ApplyContext(const Document &doc,
                                    std::vector<TermMatch> matches,
                                    const Lexicon &lexicon,
                                    const std::vector<ContextRule> &rules,
                                    const DetectorConfig &config);

// True iff at least one match is accepted.
bool FlagDocument(const std::vector<TermMatch> &matches);

struct Detection {
  std::vector<TermMatch> matches;
  bool doc_flag = false;

  std::vector<Span> AcceptedSpans() const;
};

Detection Detect(const Document &doc, const Lexicon &lexicon,
                 const std::vector<ContextRule> &rules,
                 const DetectorConfig &config);

// {id, matches:[{entry_id, start, end, kind, similarity, context_score,
// accepted}], doc_flag}
Json DetectionToJson(std::string_view doc_id, const Detection &detection);

// Externally produced predictions, in the gold record shape.
struct PredictionRecord {
  std::string doc_id;
  std::vector<Span> term_spans;
  bool doc_flag = false;
  bool has_entities = false;
  std::vector<GoldEntity> entities;
};

std::vector<PredictionRecord> ParsePredictions(std::istream &in,
                                               std::string_view name);
std::vector<PredictionRecord> LoadPredictions(
    const std::filesystem::path &path);

}  // namespace deedscan

#endif  // DEEDSCAN_DETECTOR_H_
