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

#ifndef DEEDSCAN_GEOREF_H_
#define DEEDSCAN_GEOREF_H_

#include <string>
#include <vector>

#include "deedscan/geoner.h"
#include "deedscan/jsonl.h"
#include "deedscan/plss.h"

namespace deedscan {

enum class GeorefPath {
  kNoCandidates,  // no Township/Range pair in the deed
  kTop,           // top-ranked candidate resolved
  kNext,          // second-ranked candidate resolved
  kTopTuple,      // only the township of the top candidate resolved
  kUnresolved,
};

const char *GeorefPathName(GeorefPath path);

struct GeorefResult {
  GeorefPath path = GeorefPath::kNoCandidates;
  PlssKey key;
  // Finest boundary found; null when unresolved.
  const GeoBoundary *boundary = nullptr;
  // Township containing the resolved key, used for 6x6 scoring.
  const GeoBoundary *township = nullptr;
  bool ambiguous = false;

  bool resolved() const { return boundary != nullptr; }
  bool fallback() const {
    return path == GeorefPath::kNext || path == GeorefPath::kTopTuple;
  }
  Resolution resolution() const {
    return boundary ? boundary->resolution : Resolution::kTownship;
  }
};

// Resolves the top candidate; if that fails the second candidate, then the
// township of the top candidate. The deed's state is tried first and, when
// it does not resolve, the key is retried with the state left open so the
// range direction picks the state.
GeorefResult Georeference(const Extraction &extraction, const PlssIndex &index);

// {id, path, key, resolution, bbox, boundary}; key, bbox and boundary are
// null when unresolved.
Json GeorefToJson(const std::string &doc_id, const GeorefResult &result);

// GeoJSON Feature for a resolved deed.
Json GeorefFeature(const std::string &doc_id, const GeorefResult &result);

}  // namespace deedscan

#endif  // DEEDSCAN_GEOREF_H_
