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

#include "deedscan/geoner.h"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

#include "deedscan/similarity.h"
#include "deedscan/text.h"

namespace deedscan {

namespace {

// Longest run of tokens offered to the numeral parser.
constexpr size_t kNumeralLookahead = 12;

const std::unordered_map<std::string, EntityClass> &KeywordTable() {
  static const auto *table = new std::unordered_map<std::string, EntityClass>{
      {"township", EntityClass::kTownship}, {"twp", EntityClass::kTownship},
      {"tp", EntityClass::kTownship},       {"twsp", EntityClass::kTownship},
      {"twnshp", EntityClass::kTownship},   {"tshp", EntityClass::kTownship},
      {"range", EntityClass::kRange},       {"rge", EntityClass::kRange},
      {"rng", EntityClass::kRange},         {"rg", EntityClass::kRange},
      {"section", EntityClass::kSection},   {"sec", EntityClass::kSection},
      {"sect", EntityClass::kSection},
  };
  return *table;
}

const std::unordered_set<std::string> &Fillers() {
  static const auto *fillers = new std::unordered_set<std::string>{
      "numbered", "no", "number", "num", "nr"};
  return *fillers;
}

// Recognizes a PLSS keyword. Full keywords tolerate one edit.
std::optional<EntityClass> KeywordClass(const Token &token) {
  const std::string &word = token.normalized;
  if (word.empty()) return std::nullopt;
  auto it = KeywordTable().find(word);
  if (it != KeywordTable().end()) return it->second;
  if ((word == "t" || word == "r") && token.surface.back() == '.') {
    return word == "t" ? EntityClass::kTownship : EntityClass::kRange;
  }
  if (word.size() >= 4) {
    std::u32string chars = DecodeUtf8(word);
    static const std::pair<std::u32string, EntityClass> kFull[] = {
        {U"township", EntityClass::kTownship},
        {U"range", EntityClass::kRange},
        {U"section", EntityClass::kSection},
    };
    for (const auto &[keyword, cls] : kFull) {
      if (keyword.size() >= 5 && LevenshteinDistance(chars, keyword) <= 1) {
        return cls;
      }
    }
  }
  return std::nullopt;
}

std::optional<char> DirectionOf(EntityClass cls, const std::string &word) {
  if (cls == EntityClass::kTownship) {
    if (word == "n" || word == "north") return 'N';
    if (word == "s" || word == "south") return 'S';
    if (word.size() >= 4) {
      std::u32string chars = DecodeUtf8(word);
      if (LevenshteinDistance(chars, U"north") <= 1) return 'N';
      if (LevenshteinDistance(chars, U"south") <= 1) return 'S';
    }
  } else if (cls == EntityClass::kRange) {
    if (word == "e" || word == "east") return 'E';
    if (word == "w" || word == "west") return 'W';
  }
  return std::nullopt;
}

// "28n" -> (28, 'N') when the letter is a direction of the class.
std::optional<std::pair<int, char>> NumberWithDirection(EntityClass cls,
                                                        const std::string &word) {
  if (word.size() < 2) return std::nullopt;
  auto dir = DirectionOf(cls, word.substr(word.size() - 1));
  if (!dir) return std::nullopt;
  std::string digits = word.substr(0, word.size() - 1);
  if (digits.find_first_not_of("0123456789") != std::string::npos) {
    return std::nullopt;
  }
  auto value = ParseArabic(digits);
  if (!value) return std::nullopt;
  return std::make_pair(*value, *dir);
}

// Single-token forms such as "t28n", "r23w" or "s25".
std::optional<EntityMention> CompactMention(const Token &token) {
  const std::string &word = token.normalized;
  static const std::pair<const char *, EntityClass> kPrefixes[] = {
      {"twp", EntityClass::kTownship}, {"t", EntityClass::kTownship},
      {"rge", EntityClass::kRange},    {"rng", EntityClass::kRange},
      {"r", EntityClass::kRange},      {"sec", EntityClass::kSection},
      {"s", EntityClass::kSection},
  };
  for (const auto &[prefix, cls] : kPrefixes) {
    std::string_view p(prefix);
    if (word.size() <= p.size() || word.compare(0, p.size(), p) != 0) continue;
    std::string rest = word.substr(p.size());
    if (rest.empty() || rest[0] < '0' || rest[0] > '9') continue;
    EntityMention m;
    m.cls = cls;
    if (auto nd = NumberWithDirection(cls, rest)) {
      m.number = nd->first;
      m.direction = nd->second;
      m.explicit_direction = true;
    } else if (rest.find_first_not_of("0123456789") == std::string::npos) {
      auto value = ParseArabic(rest);
      if (!value) continue;
      m.number = *value;
    } else {
      continue;
    }
    m.numeral = NumeralParse{m.number, NumeralForm::kArabic, false, 1, token.core()};
    return m;
  }
  return std::nullopt;
}

bool IsCountyWord(const std::string &word) {
  return word == "county" || word == "co" || word == "cnty";
}

}  // namespace

std::string EntityMention::Value() const {
  if (IsPlssClass(cls)) {
    std::string value = std::to_string(number);
    if (cls != EntityClass::kSection && direction != 0) value += direction;
    return value;
  }
  return name;
}

std::vector<EntityMention> ExtractPlss(const Document &doc,
                                       std::vector<std::string> *diagnostics,
                                       const GeonerConfig &config) {
  const auto &tokens = doc.tokens();
  std::vector<EntityMention> mentions;
  auto note = [&](const std::string &message) {
    if (diagnostics != nullptr) diagnostics->push_back(message);
  };

  size_t i = 0;
  while (i < tokens.size()) {
    EntityMention mention;
    size_t last = i;  // last consumed token
    bool found = false;

    if (auto compact = CompactMention(tokens[i])) {
      mention = std::move(*compact);
      found = true;
    } else if (auto cls = KeywordClass(tokens[i])) {
      mention.cls = *cls;
      size_t j = i + 1;
      while (j < tokens.size() && j - i <= config.keyword_reach) {
        const std::string &word = tokens[j].normalized;
        if (word.empty() || Fillers().count(word)) {
          ++j;
          continue;
        }
        if (auto nd = NumberWithDirection(*cls, word)) {
          mention.number = nd->first;
          mention.direction = nd->second;
          mention.explicit_direction = true;
          mention.numeral = NumeralParse{nd->first, NumeralForm::kArabic, false,
                                         1, tokens[j].core()};
          last = j;
          found = true;
          break;
        }
        std::vector<std::string> run;
        for (size_t k = j; k < tokens.size() && run.size() < kNumeralLookahead; ++k) {
          run.push_back(RepairOcrDigits(tokens[k].normalized));
        }
        if (auto parse = ParseNumeralPrefix(run)) {
          last = j + parse->token_count - 1;
          parse->source_span = CoreSpan(tokens, j, last);
          mention.number = parse->value;
          mention.numeral = *parse;
          found = true;
        }
        break;
      }
      if (!found) {
        note(std::string(EntityClassName(*cls)) + " keyword at " +
             std::to_string(tokens[i].start) + " has no numeral");
      }
    }

    if (!found) {
      ++i;
      continue;
    }

    if (mention.cls != EntityClass::kSection && !mention.explicit_direction) {
      size_t k = last + 1;
      while (k < tokens.size() && tokens[k].normalized.empty() && k <= last + 2) ++k;
      if (k < tokens.size()) {
        if (auto dir = DirectionOf(mention.cls, tokens[k].normalized)) {
          mention.direction = *dir;
          mention.explicit_direction = true;
          last = k;
        }
      }
    }

    mention.first_token = i;
    mention.token_count = last - i + 1;
    mention.span = CoreSpan(tokens, i, last);
    mention.surface = doc.Slice(mention.span);

    bool valid = mention.number >= 1;
    if (mention.cls == EntityClass::kSection && mention.number > 36) valid = false;
    if (valid) {
      mentions.push_back(std::move(mention));
    } else {
      note(std::string(EntityClassName(mention.cls)) + " value " +
           std::to_string(mention.number) + " at " +
           std::to_string(mention.span.start) + " is out of range; dropped");
    }
    i = last + 1;
  }
  return mentions;
}

std::vector<EntityMention> ExtractRpss(const Document &doc,
                                       const Gazetteer &gazetteer,
                                       const SubdivisionMatcher *subdivisions) {
  const auto &tokens = doc.tokens();
  struct Hit {
    size_t first;
    size_t count;
    std::string phrase;
    const std::vector<size_t> *records;
  };
  std::vector<Hit> hits;
  size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].normalized.empty()) {
      ++i;
      continue;
    }
    bool found = false;
    size_t longest = std::min(gazetteer.max_name_words(), tokens.size() - i);
    for (size_t n = longest; n >= 1 && !found; --n) {
      std::string phrase;
      bool gap = false;
      for (size_t k = i; k < i + n; ++k) {
        if (tokens[k].normalized.empty()) {
          gap = true;
          break;
        }
        if (k > i) phrase += ' ';
        phrase += tokens[k].normalized;
      }
      if (gap) continue;
      if (const auto *records = gazetteer.Lookup(phrase)) {
        hits.push_back({i, n, phrase, records});
        i += n;
        found = true;
      }
    }
    if (!found) ++i;
  }

  std::vector<EntityMention> mentions;
  auto make = [&](const Hit &hit, EntityClass cls, size_t record) {
    EntityMention m;
    m.cls = cls;
    m.first_token = hit.first;
    m.token_count = hit.count;
    m.span = CoreSpan(tokens, hit.first, hit.first + hit.count - 1);
    m.surface = doc.Slice(m.span);
    m.name = gazetteer.records()[record].name;
    m.record = static_cast<long>(record);
    return m;
  };

  for (const Hit &hit : hits) {
    for (size_t idx : *hit.records) {
      if (gazetteer.records()[idx].cls == EntityClass::kState) {
        mentions.push_back(make(hit, EntityClass::kState, idx));
        break;
      }
    }
  }
  std::string state = InferState(mentions, nullptr);

  for (const Hit &hit : hits) {
    bool county_context = false;
    size_t lo = hit.first >= 2 ? hit.first - 2 : 0;
    size_t hi = std::min(tokens.size(), hit.first + hit.count + 2);
    for (size_t k = lo; k < hi; ++k) {
      if (k >= hit.first && k < hit.first + hit.count) continue;
      if (IsCountyWord(tokens[k].normalized)) county_context = true;
    }
    std::optional<size_t> county, city;
    for (size_t idx : *hit.records) {
      const GazetteerRecord &rec = gazetteer.records()[idx];
      if (rec.cls == EntityClass::kCounty) {
        if (!county || (rec.parent == state &&
                        gazetteer.records()[*county].parent != state)) {
          county = idx;
        }
      } else if (rec.cls == EntityClass::kCity) {
        if (!city) city = idx;
      }
    }
    if (county && (county_context || gazetteer.CountyCount(hit.phrase) == 1)) {
      mentions.push_back(make(hit, EntityClass::kCounty, *county));
    }
    if (city && !county_context) {
      mentions.push_back(make(hit, EntityClass::kCity, *city));
    }
  }

  if (subdivisions != nullptr) {
    for (const SubdivisionHit &hit : subdivisions->FindInDocument(doc)) {
      EntityMention m;
      m.cls = EntityClass::kSubdivision;
      m.first_token = hit.first_token;
      m.token_count = hit.token_count;
      m.span = hit.span;
      m.surface = doc.Slice(m.span);
      m.name = gazetteer.records()[hit.match.record].name;
      m.record = static_cast<long>(hit.match.record);
      m.similarity = hit.match.similarity;
      mentions.push_back(std::move(m));
    }
  }

  std::stable_sort(mentions.begin(), mentions.end(),
                   [](const EntityMention &a, const EntityMention &b) {
                     if (a.span.start != b.span.start) return a.span.start < b.span.start;
                     return a.cls < b.cls;
                   });
  return mentions;
}

std::string InferState(const std::vector<EntityMention> &mentions,
                       const Gazetteer *gazetteer) {
  std::vector<std::pair<std::string, size_t>> counts;
  for (const EntityMention &m : mentions) {
    if (m.cls != EntityClass::kState) continue;
    auto it = std::find_if(counts.begin(), counts.end(),
                           [&](const auto &c) { return c.first == m.name; });
    if (it == counts.end()) {
      counts.emplace_back(m.name, 1);
    } else {
      ++it->second;
    }
  }
  if (!counts.empty()) {
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    return best->first;
  }
  if (gazetteer != nullptr) {
    for (const EntityMention &m : mentions) {
      if (m.cls != EntityClass::kCounty || m.record < 0) continue;
      const std::string &parent = gazetteer->records()[m.record].parent;
      if (const auto *recs = gazetteer->Lookup(Join(NormalizedWords(parent), " "))) {
        for (size_t idx : *recs) {
          if (gazetteer->records()[idx].cls == EntityClass::kState) {
            return gazetteer->records()[idx].name;
          }
        }
      }
    }
  }
  return "";
}

void FillDefaultDirections(std::vector<EntityMention> &mentions,
                           const std::string &state,
                           const GeonerConfig &config) {
  auto it = config.state_directions.find(state);
  for (EntityMention &m : mentions) {
    if (m.direction != 0) continue;
    if (m.cls == EntityClass::kTownship) {
      m.direction = it != config.state_directions.end() ? it->second.township_dir
                                                        : config.fallback_township_dir;
    } else if (m.cls == EntityClass::kRange && it != config.state_directions.end()) {
      m.direction = it->second.range_dir;
    }
  }
}

std::vector<PlssCandidate> SelectPlssKey(
    const std::vector<EntityMention> &mentions, const GeonerConfig &config) {
  std::vector<const EntityMention *> townships, ranges, sections;
  for (const EntityMention &m : mentions) {
    if (m.cls == EntityClass::kTownship) townships.push_back(&m);
    if (m.cls == EntityClass::kRange) ranges.push_back(&m);
    if (m.cls == EntityClass::kSection) sections.push_back(&m);
  }
  auto by_position = [](const EntityMention *a, const EntityMention *b) {
    return a->first_token < b->first_token;
  };
  std::sort(townships.begin(), townships.end(), by_position);
  std::sort(ranges.begin(), ranges.end(), by_position);
  std::sort(sections.begin(), sections.end(), by_position);

  auto distance = [](const EntityMention *a, const EntityMention *b) {
    return a->first_token > b->first_token ? a->first_token - b->first_token
                                           : b->first_token - a->first_token;
  };

  struct Pair {
    const EntityMention *township;
    const EntityMention *range;
    std::vector<const EntityMention *> sections;
  };
  std::vector<Pair> pairs;
  for (const EntityMention *t : townships) {
    const EntityMention *nearest = nullptr;
    for (const EntityMention *r : ranges) {
      if (distance(t, r) > config.group_window) continue;
      if (nearest == nullptr || distance(t, r) < distance(t, nearest)) nearest = r;
    }
    if (nearest != nullptr) pairs.push_back({t, nearest, {}});
  }

  for (const EntityMention *s : sections) {
    Pair *best = nullptr;
    size_t best_distance = 0;
    for (Pair &p : pairs) {
      size_t lo = std::min({s->first_token, p.township->first_token, p.range->first_token});
      size_t hi = std::max({s->first_token, p.township->first_token, p.range->first_token});
      if (hi - lo > config.group_window) continue;
      size_t d = std::max(distance(s, p.township), distance(s, p.range));
      if (best == nullptr || d < best_distance) {
        best = &p;
        best_distance = d;
      }
    }
    if (best != nullptr) best->sections.push_back(s);
  }

  std::vector<PlssCandidate> ranked;
  auto add = [&](PlssCandidate c) {
    for (PlssCandidate &existing : ranked) {
      if (existing.SameKey(c)) {
        ++existing.count;
        existing.first_offset = std::min(existing.first_offset, c.first_offset);
        return;
      }
    }
    ranked.push_back(c);
  };
  for (const Pair &p : pairs) {
    PlssCandidate base;
    base.township = p.township->number;
    base.township_dir = p.township->direction;
    base.range = p.range->number;
    base.range_dir = p.range->direction;
    base.count = 1;
    base.first_offset = std::min(p.township->span.start, p.range->span.start);
    if (p.sections.empty()) {
      add(base);
      continue;
    }
    for (const EntityMention *s : p.sections) {
      PlssCandidate c = base;
      c.section = s->number;
      c.first_offset = std::min(c.first_offset, s->span.start);
      add(c);
    }
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const PlssCandidate &a, const PlssCandidate &b) {
                     if (a.count != b.count) return a.count > b.count;
                     return a.first_offset < b.first_offset;
                   });
  return ranked;
}

bool Extraction::has_subdivision() const {
  return std::any_of(entities.begin(), entities.end(), [](const EntityMention &m) {
    return m.cls == EntityClass::kSubdivision;
  });
}

GeoExtractor::GeoExtractor(const Gazetteer *gazetteer,
                           const SubdivisionMatcher *subdivisions,
                           GeonerConfig config)
    : gazetteer_(gazetteer), subdivisions_(subdivisions), config_(std::move(config)) {}

Extraction GeoExtractor::Extract(const Document &doc) const {
  Extraction out;
  std::vector<EntityMention> rpss;
  if (gazetteer_ != nullptr) rpss = ExtractRpss(doc, *gazetteer_, subdivisions_);
  out.state = InferState(rpss, gazetteer_);
  std::vector<EntityMention> plss = ExtractPlss(doc, &out.diagnostics, config_);
  FillDefaultDirections(plss, out.state, config_);
  out.candidates = SelectPlssKey(plss, config_);

  out.entities = std::move(rpss);
  out.entities.insert(out.entities.end(), std::make_move_iterator(plss.begin()),
                      std::make_move_iterator(plss.end()));
  std::stable_sort(out.entities.begin(), out.entities.end(),
                   [](const EntityMention &a, const EntityMention &b) {
                     if (a.span.start != b.span.start) return a.span.start < b.span.start;
                     return a.cls < b.cls;
                   });
  return out;
}

Json ExtractionToJson(const std::string &doc_id, const Extraction &extraction) {
  Json entities = Json::array();
  for (const EntityMention &m : extraction.entities) {
    entities.push_back({{"class", EntityClassName(m.cls)},
                        {"start", m.span.start},
                        {"end", m.span.end},
                        {"surface", m.surface},
                        {"value", m.Value()}});
  }
  Json candidates = Json::array();
  for (const PlssCandidate &c : extraction.candidates) {
    Json record;
    record["t"] = c.township;
    record["t_dir"] = c.township_dir ? std::string(1, c.township_dir) : "";
    record["r"] = c.range;
    record["r_dir"] = c.range_dir ? std::string(1, c.range_dir) : "";
    if (c.section) record["s"] = *c.section;
    record["count"] = c.count;
    candidates.push_back(std::move(record));
  }
  Json out;
  out["id"] = doc_id;
  out["entities"] = std::move(entities);
  out["plss_candidates"] = std::move(candidates);
  return out;
}

}  // namespace deedscan
