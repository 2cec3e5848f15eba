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

#ifndef DEEDSCAN_GEONER_H_
#define DEEDSCAN_GEONER_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deedscan/corpus.h"
#include "deedscan/gazetteer.h"
#include "deedscan/jsonl.h"
#include "deedscan/numerals.h"
#include "deedscan/subdiv.h"

namespace deedscan {

struct EntityMention {
  EntityClass cls = EntityClass::kState;
  Span span;
  size_t first_token = 0;
  size_t token_count = 0;
  std::string surface;

  // Township, Range and Section. `direction` is 'N'/'S' for townships and
  // 'E'/'W' for ranges; 0 when neither stated nor defaulted.
  int number = 0;
  char direction = 0;
  bool explicit_direction = false;
  std::optional<NumeralParse> numeral;

  // State, County, City and Subdivision: canonical gazetteer name.
  std::string name;
  // Gazetteer record index, or -1.
  long record = -1;
  double similarity = 1.0;

  // "8N", "25", "Dakota".
  std::string Value() const;
};

// Per-state survey orientation used when a deed omits a direction.
struct StateDirections {
  char township_dir = 'N';
  char range_dir = 0;
};

struct GeonerConfig {
  // Tokens allowed between a keyword and its numeral.
  size_t keyword_reach = 4;
  // Maximum token spread of a (Township, Range, Section) grouping.
  size_t group_window = 40;
  std::map<std::string, StateDirections> state_directions = {
      {"Minnesota", {'N', 'W'}},
      {"Wisconsin", {'N', 'E'}},
  };
  // Applied to townships when the deed's state is unknown.
  char fallback_township_dir = 'N';
};

// Township/Range/Section mentions found by keyword + numeral patterns.
// Directions are left as written; see FillDefaultDirections.
std::vector<EntityMention> ExtractPlss(const Document &doc,
                                       std::vector<std::string> *diagnostics =
                                           nullptr,
                                       const GeonerConfig &config = {});

// State/County/City mentions by longest gazetteer match, plus accepted
// Subdivision mentions when a matcher is given.
std::vector<EntityMention> ExtractRpss(const Document &doc,
                                       const Gazetteer &gazetteer,
                                       const SubdivisionMatcher *subdivisions);

// The deed's state: the most frequent State mention (earliest on ties),
// else the parent state of the first County mention, else empty.
std::string InferState(const std::vector<EntityMention> &mentions,
                       const Gazetteer *gazetteer);

// Fills missing Township/Range directions from the state's orientation.
void FillDefaultDirections(std::vector<EntityMention> &mentions,
                           const std::string &state,
                           const GeonerConfig &config);

struct PlssCandidate {
  int township = 0;
  char township_dir = 0;
  int range = 0;
  char range_dir = 0;
  std::optional<int> section;
  size_t count = 0;
  // Character offset of the earliest member mention.
  size_t first_offset = 0;

  bool SameKey(const PlssCandidate &other) const {
    return township == other.township && township_dir == other.township_dir &&
           range == other.range && range_dir == other.range_dir &&
           section == other.section;
  }
};

// Groups mentions into (Township, Range[, Section]) combinations. Each
// township pairs with its nearest range; each section joins the nearest
// such pair whose members all lie within `group_window` tokens. Pairs with
// no section yield tuples. Ranked by frequency, then first occurrence.
std::vector<PlssCandidate> SelectPlssKey(
    const std::vector<EntityMention> &mentions, const GeonerConfig &config = {});

struct Extraction {
  std::vector<EntityMention> entities;  // ordered by position, then class
  std::vector<PlssCandidate> candidates;
  std::string state;
  std::vector<std::string> diagnostics;

  bool has_subdivision() const;
};

class GeoExtractor {
 public:
  GeoExtractor(const Gazetteer *gazetteer,
               const SubdivisionMatcher *subdivisions, GeonerConfig config);

  Extraction Extract(const Document &doc) const;
  const GeonerConfig &config() const { return config_; }

 private:
  const Gazetteer *gazetteer_;
  const SubdivisionMatcher *subdivisions_;
  GeonerConfig config_;
};

// {id, entities:[{class, start, end, surface, value}],
//  plss_candidates:[{t, t_dir, r, r_dir, s?, count}]}
Json ExtractionToJson(const std::string &doc_id, const Extraction &extraction);

}  // namespace deedscan

#endif  // DEEDSCAN_GEONER_H_
