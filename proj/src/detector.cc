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

#include "deedscan/detector.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "deedscan/similarity.h"
#include "deedscan/text.h"

namespace deedscan {

namespace {

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, '\t')) fields.push_back(field);
  return fields;
}

std::string Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Similarity of one token against one phrase word, or -1 when the pair
// cannot reach the threshold.
double WordSimilarity(const std::u32string &token, const std::u32string &word,
                      double threshold, size_t min_fuzzy_length) {
  if (token == word) return 1.0;
  if (word.size() < min_fuzzy_length || token.empty()) return -1;
  if (MaxSimilarity(token.size(), word.size()) < threshold) return -1;
  double sim = Similarity(token, word);
  return sim >= threshold ? sim : -1;
}

bool Triggers(const ContextRule &rule, const TermMatch &match,
              const LexiconEntry *entry) {
  if (rule.trigger == "*" || rule.trigger == match.entry_id) return true;
  return entry != nullptr && rule.trigger == entry->category;
}

bool CueInWindow(const Document &doc, const TermMatch &match,
                 const ContextRule &rule) {
  const auto &tokens = doc.tokens();
  size_t lo = match.first_token >= rule.window ? match.first_token - rule.window : 0;
  size_t last = match.first_token + match.token_count;
  size_t hi = std::min(tokens.size(), last + rule.window);
  for (size_t i = lo; i < hi; ++i) {
    if (i >= match.first_token && i < last) continue;
    for (const std::string &cue : rule.cue_words) {
      if (tokens[i].normalized == cue) return true;
    }
  }
  return false;
}

}  // namespace

const char *MatchKindName(MatchKind kind) {
  return kind == MatchKind::kExact ? "exact" : "fuzzy";
}

void Lexicon::Add(LexiconEntry entry) {
  if (entry.phrase.empty()) throw Error("lexicon entry has an empty phrase");
  if (entry.entry_id.empty()) entry.entry_id = Join(entry.phrase, " ");
  if (Find(entry.entry_id) != nullptr) {
    throw Error("duplicate lexicon phrase '" + entry.entry_id + "'");
  }
  entry.phrase_chars.clear();
  for (const std::string &word : entry.phrase) {
    entry.phrase_chars.push_back(DecodeUtf8(word));
  }
  max_phrase_length_ = std::max(max_phrase_length_, entry.phrase.size());
  entries_.push_back(std::move(entry));
}

const LexiconEntry *Lexicon::Find(std::string_view entry_id) const {
  for (const LexiconEntry &entry : entries_) {
    if (entry.entry_id == entry_id) return &entry;
  }
  return nullptr;
}

Lexicon Lexicon::Parse(std::istream &in, std::string_view name) {
  Lexicon lexicon;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string content = line.substr(0, line.find('#'));
    if (Trim(content).empty()) continue;
    std::string where = std::string(name) + ":" + std::to_string(line_no);
    std::vector<std::string> fields = SplitTabs(content);
    LexiconEntry entry;
    entry.phrase = NormalizedWords(fields[0]);
    if (entry.phrase.empty()) throw Error(where + ": phrase has no words");
    entry.category = fields.size() > 1 ? Trim(fields[1]) : "";
    if (entry.category.empty()) entry.category = "term";
    if (fields.size() > 2 && !Trim(fields[2]).empty()) {
      std::string value = Trim(fields[2]);
      double threshold = 0;
      try {
        size_t used = 0;
        threshold = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception &) {
        throw Error(where + ": invalid min_similarity '" + value + "'");
      }
      if (threshold < 0 || threshold > 1) {
        throw Error(where + ": min_similarity must lie in [0,1]");
      }
      entry.min_similarity = threshold;
    }
    try {
      lexicon.Add(std::move(entry));
    } catch (const Error &e) {
      throw Error(where + ": " + e.what());
    }
  }
  if (lexicon.entries().empty()) {
    throw Error(std::string(name) + ": lexicon is empty");
  }
  return lexicon;
}

Lexicon Lexicon::Load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon " + path.string());
  return Parse(in, path.string());
}

std::vector<ContextRule> ParseContextRules(std::istream &in,
                                           std::string_view name) {
  std::vector<ContextRule> rules;
  ForEachJsonLine(in, name, [&](size_t, const Json &record) {
    ContextRule rule;
    rule.rule_id = RequireString(record, "rule_id");
    rule.trigger = RequireString(record, "trigger");
    const Json &window = RequireField(record, "window");
    if (!window.is_number_integer() || window.get<long long>() < 1) {
      throw Error("rule '" + rule.rule_id + "': window must be >= 1");
    }
    rule.window = window.get<size_t>();
    for (const Json &cue : RequireField(record, "cue_words")) {
      std::string word = NormalizeWord(cue.get<std::string>());
      if (!word.empty()) rule.cue_words.push_back(word);
    }
    if (rule.cue_words.empty()) {
      throw Error("rule '" + rule.rule_id + "': cue_words is empty");
    }
    std::string effect = RequireString(record, "effect");
    if (effect == "suppress") {
      rule.effect = ContextEffect::kSuppress;
    } else if (effect == "boost") {
      rule.effect = ContextEffect::kBoost;
    } else {
      throw Error("rule '" + rule.rule_id + "': unknown effect '" + effect + "'");
    }
    rule.weight = RequireField(record, "weight").get<double>();
    if (!(rule.weight > 0 && rule.weight <= 1)) {
      throw Error("rule '" + rule.rule_id + "': weight must lie in (0,1]");
    }
    rules.push_back(std::move(rule));
  });
  return rules;
}

std::vector<ContextRule> LoadContextRules(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open context rules " + path.string());
  return ParseContextRules(in, path.string());
}

std::vector<TermMatch> MatchTerms(const Document &doc, const Lexicon &lexicon,
                                  const DetectorConfig &config) {
  const auto &tokens = doc.tokens();
  std::vector<std::u32string> token_chars;
  token_chars.reserve(tokens.size());
  for (const Token &token : tokens) {
    token_chars.push_back(DecodeUtf8(token.normalized));
  }

  std::vector<TermMatch> candidates;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (token_chars[i].empty()) continue;
    for (const LexiconEntry &entry : lexicon.entries()) {
      size_t n = entry.phrase_chars.size();
      if (i + n > tokens.size()) continue;
      double threshold =
          std::max(config.similarity_threshold, entry.min_similarity.value_or(0));
      double worst = 1.0;
      bool exact = true;
      for (size_t k = 0; k < n; ++k) {
        double sim = WordSimilarity(token_chars[i + k], entry.phrase_chars[k],
                                    threshold, config.min_fuzzy_length);
        if (sim < 0) {
          worst = -1;
          break;
        }
        if (token_chars[i + k] != entry.phrase_chars[k]) exact = false;
        worst = std::min(worst, sim);
      }
      if (worst < 0) continue;
      TermMatch match;
      match.entry_id = entry.entry_id;
      match.span = CoreSpan(tokens, i, i + n - 1);
      match.first_token = i;
      match.token_count = n;
      match.kind = exact ? MatchKind::kExact : MatchKind::kFuzzy;
      match.similarity = exact ? 1.0 : worst;
      match.threshold = threshold;
      candidates.push_back(std::move(match));
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const TermMatch &a, const TermMatch &b) {
              if (a.similarity != b.similarity) return a.similarity > b.similarity;
              if (a.token_count != b.token_count) return a.token_count > b.token_count;
              if (a.span.length() != b.span.length()) {
                return a.span.length() > b.span.length();
              }
              if (a.span.start != b.span.start) return a.span.start < b.span.start;
              return a.entry_id < b.entry_id;
            });

  std::vector<bool> taken(tokens.size(), false);
  std::vector<TermMatch> selected;
  for (TermMatch &match : candidates) {
    bool free = true;
    for (size_t k = 0; k < match.token_count; ++k) {
      if (taken[match.first_token + k]) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    for (size_t k = 0; k < match.token_count; ++k) taken[match.first_token + k] = true;
    match.context_score = 1.0;
    match.accepted = match.similarity >= match.threshold &&
                     match.context_score >= config.context_threshold;
    selected.push_back(std::move(match));
  }
  std::sort(selected.begin(), selected.end(),
            [](const TermMatch &a, const TermMatch &b) {
              return a.span.start < b.span.start;
            });
  return selected;
}

std::vector<TermMatch> ApplyContext(const Document &doc,
                                    std::vector<TermMatch> matches,
                                    const Lexicon &lexicon,
                                    const std::vector<ContextRule> &rules,
                                    const DetectorConfig &config) {
  for (TermMatch &match : matches) {
    const LexiconEntry *entry = lexicon.Find(match.entry_id);
    double score = 1.0;
    for (const ContextRule &rule : rules) {
      if (rule.effect != ContextEffect::kSuppress) continue;
      if (Triggers(rule, match, entry) && CueInWindow(doc, match, rule)) {
        score *= 1.0 - rule.weight;
      }
    }
    // Boosts recover part of a suppression; a full-weight suppression is a
    // veto.
    for (const ContextRule &rule : rules) {
      if (score <= 0) break;
      if (rule.effect != ContextEffect::kBoost) continue;
      if (Triggers(rule, match, entry) && CueInWindow(doc, match, rule)) {
        score += rule.weight * (1.0 - score);
      }
    }
    match.context_score = std::clamp(score, 0.0, 1.0);
    match.accepted = match.similarity >= match.threshold &&
                     match.context_score >= config.context_threshold;
  }
  return matches;
}

bool FlagDocument(const std::vector<TermMatch> &matches) {
  return std::any_of(matches.begin(), matches.end(),
                     [](const TermMatch &m) { return m.accepted; });
}

std::vector<Span> Detection::AcceptedSpans() const {
  std::vector<Span> spans;
  for (const TermMatch &match : matches) {
    if (match.accepted) spans.push_back(match.span);
  }
  return spans;
}

Detection Detect(const Document &doc, const Lexicon &lexicon,
                 const std::vector<ContextRule> &rules,
                 const DetectorConfig &config) {
  Detection detection;
  detection.matches = ApplyContext(doc, MatchTerms(doc, lexicon, config),
                                   lexicon, rules, config);
  detection.doc_flag = FlagDocument(detection.matches);
  return detection;
}

Json DetectionToJson(std::string_view doc_id, const Detection &detection) {
  Json matches = Json::array();
  for (const TermMatch &m : detection.matches) {
    matches.push_back({{"entry_id", m.entry_id},
                       {"start", m.span.start},
                       {"end", m.span.end},
                       {"kind", MatchKindName(m.kind)},
                       {"similarity", m.similarity},
                       {"context_score", m.context_score},
                       {"accepted", m.accepted}});
  }
  Json out;
  out["id"] = doc_id;
  out["matches"] = std::move(matches);
  out["doc_flag"] = detection.doc_flag;
  return out;
}

std::vector<PredictionRecord> ParsePredictions(std::istream &in,
                                               std::string_view name) {
  std::vector<PredictionRecord> records;
  ForEachJsonLine(in, name, [&](size_t, const Json &record) {
    PredictionRecord pred;
    pred.doc_id = RequireString(record, "id");
    if (record.contains("term_spans")) {
      pred.term_spans = ParseSpanList(record["term_spans"]);
    }
    if (record.contains("doc_flag")) {
      if (!record["doc_flag"].is_boolean()) {
        throw Error("field 'doc_flag' must be a boolean");
      }
      pred.doc_flag = record["doc_flag"].get<bool>();
    } else {
      pred.doc_flag = !pred.term_spans.empty();
    }
    if (record.contains("entities")) {
      pred.has_entities = true;
      for (const Json &e : record["entities"]) {
        pred.entities.push_back(ParseEntityRecord(e));
      }
    }
    records.push_back(std::move(pred));
  });
  return records;
}

std::vector<PredictionRecord> LoadPredictions(
    const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open predictions " + path.string());
  return ParsePredictions(in, path.string());
}

}  // namespace deedscan
