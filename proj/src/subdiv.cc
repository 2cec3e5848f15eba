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

#include "deedscan/subdiv.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "deedscan/similarity.h"
#include "deedscan/text.h"

namespace deedscan {

namespace {

std::vector<std::string> SplitWords(std::string_view canonical) {
  std::vector<std::string> words;
  std::stringstream ss{std::string(canonical)};
  std::string word;
  while (ss >> word) words.push_back(word);
  return words;
}

}  // namespace

const AbbreviationTable &AbbreviationTable::Default() {
  static const AbbreviationTable *table = [] {
    auto *t = new AbbreviationTable();
    const std::pair<const char *, const char *> entries[] = {
        {"add", "addition"},     {"addn", "addition"},
        {"add'n", "addition"},   {"addtn", "addition"},
        {"addit", "addition"},   {"no", "number"},
        {"nos", "numbers"},      {"subd", "subdivision"},
        {"sub", "subdivision"},  {"subdiv", "subdivision"},
        {"rearr", "rearrangement"}, {"rearrgt", "rearrangement"},
        {"hts", "heights"},      {"hgts", "heights"},
        {"pk", "park"},          {"ter", "terrace"},
        {"terr", "terrace"},     {"mt", "mount"},
        {"st", "saint"},
        {"1st", "first"},        {"2nd", "second"},
        {"3rd", "third"},        {"4th", "fourth"},
        {"5th", "fifth"},        {"6th", "sixth"},
        {"7th", "seventh"},      {"8th", "eighth"},
        {"9th", "ninth"},        {"10th", "tenth"},
    };
    for (const auto &[variant, canonical] : entries) t->Add(variant, canonical);
    return t;
  }();
  return *table;
}

void AbbreviationTable::Add(std::string_view variant,
                            std::string_view canonical) {
  std::string key = NormalizeWord(variant);
  std::string value = Join(NormalizedWords(canonical), " ");
  if (key.empty() || value.empty()) {
    throw Error("abbreviation entry has an empty side");
  }
  for (const std::string &word : SplitWords(value)) {
    if (table_.count(word) && table_.at(word) != word) {
      throw Error("canonical form '" + value + "' is itself an abbreviation");
    }
  }
  for (const auto &[k, v] : table_) {
    for (const std::string &word : SplitWords(v)) {
      if (word == key) {
        throw Error("abbreviation '" + key + "' is the canonical form of '" +
                    k + "'");
      }
    }
  }
  auto [it, inserted] = table_.emplace(key, value);
  if (!inserted && it->second != value) {
    throw Error("conflicting expansions for '" + key + "'");
  }
}

const std::string &AbbreviationTable::Expand(const std::string &word) const {
  auto it = table_.find(word);
  return it == table_.end() ? word : it->second;
}

AbbreviationTable AbbreviationTable::Parse(std::istream &in,
                                           std::string_view name) {
  AbbreviationTable table;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string content = line.substr(0, line.find('#'));
    std::string where = std::string(name) + ":" + std::to_string(line_no);
    std::string variant, canonical;
    size_t tab = content.find('\t');
    if (tab != std::string::npos) {
      variant = content.substr(0, tab);
      canonical = content.substr(tab + 1);
    } else {
      std::stringstream ss(content);
      ss >> variant;
      std::getline(ss, canonical);
    }
    if (NormalizedWords(variant).empty() && NormalizedWords(canonical).empty()) {
      continue;
    }
    try {
      table.Add(variant, canonical);
    } catch (const Error &e) {
      throw Error(where + ": " + e.what());
    }
  }
  return table;
}

AbbreviationTable AbbreviationTable::Load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open abbreviation table " + path.string());
  return Parse(in, path.string());
}

std::string NormalizeSubdivision(std::string_view name,
                                 const AbbreviationTable &table) {
  std::string spaced(name);
  for (char &c : spaced) {
    if (c == '-') c = ' ';
  }
  std::vector<std::string> out;
  for (const std::string &word : NormalizedWords(spaced)) {
    for (std::string &piece : SplitWords(table.Expand(word))) {
      out.push_back(std::move(piece));
    }
  }
  return Join(out, " ");
}

double BlendedSimilarity(std::string_view a, std::string_view b) {
  std::vector<std::string> wa = SplitWords(a);
  std::vector<std::string> wb = SplitWords(b);
  std::set<std::string> sa(wa.begin(), wa.end());
  std::set<std::string> sb(wb.begin(), wb.end());
  size_t common = 0;
  for (const std::string &w : sa) common += sb.count(w);
  size_t unite = sa.size() + sb.size() - common;
  double jaccard = unite == 0 ? 1.0 : static_cast<double>(common) / unite;
  return 0.5 * jaccard + 0.5 * Similarity(a, b);
}

SubdivisionMatcher::SubdivisionMatcher(const Gazetteer &gazetteer,
                                       const AbbreviationTable &abbreviations,
                                       double threshold)
    : gazetteer_(&gazetteer),
      abbreviations_(&abbreviations),
      threshold_(threshold) {
  for (size_t idx : gazetteer.subdivisions()) {
    std::vector<std::string> names = gazetteer.records()[idx].aliases;
    names.insert(names.begin(), gazetteer.records()[idx].name);
    for (const std::string &name : names) {
      std::string canonical = NormalizeSubdivision(name, abbreviations);
      std::vector<std::string> words = SplitWords(canonical);
      if (words.empty()) continue;
      by_first_word_[words[0]].push_back(candidates_.size());
      max_words_ = std::max(max_words_, words.size());
      candidates_.push_back({idx, std::move(canonical), words.size()});
    }
  }
}

bool SubdivisionMatcher::Better(const SubdivisionMatch &a,
                                const SubdivisionMatch &b) const {
  if (a.similarity != b.similarity) return a.similarity > b.similarity;
  if (a.canonical_name.size() != b.canonical_name.size()) {
    return a.canonical_name.size() < b.canonical_name.size();
  }
  return a.canonical_name < b.canonical_name;
}

std::optional<SubdivisionMatch> SubdivisionMatcher::Match(
    std::string_view name) const {
  std::string canonical = NormalizeSubdivision(name, *abbreviations_);
  std::optional<SubdivisionMatch> best;
  for (const Candidate &c : candidates_) {
    SubdivisionMatch m;
    m.record = c.record;
    m.canonical_name = c.canonical;
    m.similarity = BlendedSimilarity(canonical, c.canonical);
    m.accepted = m.similarity >= threshold_;
    if (!best || Better(m, *best)) best = std::move(m);
  }
  return best;
}

std::vector<SubdivisionHit> SubdivisionMatcher::FindInDocument(
    const Document &doc) const {
  const auto &tokens = doc.tokens();
  std::vector<std::string> canonical(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    canonical[i] = NormalizeSubdivision(tokens[i].surface, *abbreviations_);
  }

  std::vector<SubdivisionHit> hits;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (canonical[i].empty()) continue;
    std::string first = canonical[i].substr(0, canonical[i].find(' '));
    auto it = by_first_word_.find(first);
    if (it == by_first_word_.end()) continue;

    std::optional<SubdivisionHit> best;
    std::string window;
    size_t limit = std::min(tokens.size() - i, max_words_ + 1);
    for (size_t n = 1; n <= limit; ++n) {
      if (!canonical[i + n - 1].empty()) {
        if (!window.empty()) window += ' ';
        window += canonical[i + n - 1];
      }
      for (size_t ci : it->second) {
        const Candidate &c = candidates_[ci];
        if (n > c.words + 1) continue;
        SubdivisionHit hit;
        hit.first_token = i;
        hit.token_count = n;
        hit.span = CoreSpan(tokens, i, i + n - 1);
        hit.match.record = c.record;
        hit.match.canonical_name = c.canonical;
        hit.match.similarity = BlendedSimilarity(window, c.canonical);
        hit.match.accepted = hit.match.similarity >= threshold_;
        if (!hit.match.accepted) continue;
        // Equal scores prefer the longer window, so a numbered plat wins
        // over its unnumbered prefix.
        bool better = !best || hit.match.similarity > best->match.similarity ||
                      (hit.match.similarity == best->match.similarity &&
                       (n > best->token_count ||
                        (n == best->token_count && Better(hit.match, best->match))));
        if (better) {
          best = std::move(hit);
        }
      }
    }
    if (best) hits.push_back(std::move(*best));
  }

  std::sort(hits.begin(), hits.end(),
            [](const SubdivisionHit &a, const SubdivisionHit &b) {
              if (a.match.similarity != b.match.similarity) {
                return a.match.similarity > b.match.similarity;
              }
              if (a.token_count != b.token_count) return a.token_count > b.token_count;
              return a.span.start < b.span.start;
            });
  std::vector<SubdivisionHit> selected;
  for (SubdivisionHit &hit : hits) {
    bool overlaps = std::any_of(selected.begin(), selected.end(),
                                [&](const SubdivisionHit &s) {
                                  return OverlapLength(s.span, hit.span) > 0;
                                });
    if (!overlaps) selected.push_back(std::move(hit));
  }
  std::sort(selected.begin(), selected.end(),
            [](const SubdivisionHit &a, const SubdivisionHit &b) {
              return a.span.start < b.span.start;
            });
  return selected;
}

}  // namespace deedscan
