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

#include "deedscan/georef.h"

namespace deedscan {

namespace {

ResolveResult ResolveWithState(PlssKey key, const PlssIndex &index) {
  ResolveResult result = index.Resolve(key);
  if (!result.found() && !key.state.empty()) {
    key.state.clear();
    result = index.Resolve(key);
  }
  return result;
}

PlssKey KeyFor(const PlssCandidate &c, const std::string &state) {
  PlssKey key;
  key.state = state;
  key.township = c.township;
  key.township_dir = c.township_dir ? c.township_dir : 'N';
  key.range = c.range;
  key.range_dir = c.range_dir;
  key.section = c.section;
  return key;
}

Json KeyToJson(const PlssKey &key) {
  Json out{{"state", key.state},
           {"t", key.township},
           {"t_dir", std::string(1, key.township_dir)},
           {"r", key.range},
           {"r_dir", key.range_dir ? std::string(1, key.range_dir) : ""}};
  if (key.section) out["s"] = *key.section;
  return out;
}

}  // namespace

const char *GeorefPathName(GeorefPath path) {
  switch (path) {
    case GeorefPath::kNoCandidates: return "no_candidates";
    case GeorefPath::kTop: return "top";
    case GeorefPath::kNext: return "next";
    case GeorefPath::kTopTuple: return "top_tuple";
    case GeorefPath::kUnresolved: return "unresolved";
  }
  return "";
}

GeorefResult Georeference(const Extraction &extraction, const PlssIndex &index) {
  GeorefResult result;
  const auto &candidates = extraction.candidates;
  if (candidates.empty()) return result;

  struct Attempt {
    PlssKey key;
    GeorefPath path;
  };
  std::vector<Attempt> attempts;
  PlssKey top = KeyFor(candidates[0], extraction.state);
  attempts.push_back({top, GeorefPath::kTop});
  if (candidates.size() > 1) {
    attempts.push_back({KeyFor(candidates[1], extraction.state), GeorefPath::kNext});
  }
  if (top.section) attempts.push_back({top.Tuple(), GeorefPath::kTopTuple});

  result.path = GeorefPath::kUnresolved;
  for (const Attempt &attempt : attempts) {
    ResolveResult found = ResolveWithState(attempt.key, index);
    if (!found.found()) continue;
    result.path = attempt.path;
    result.key = found.key;
    result.boundary = found.boundary;
    result.ambiguous = found.ambiguous;
    if (found.key.section) {
      result.township = index.Resolve(found.key.Tuple()).boundary;
    } else {
      result.township = found.boundary;
    }
    return result;
  }
  result.key = top;
  return result;
}

Json GeorefToJson(const std::string &doc_id, const GeorefResult &result) {
  Json out;
  out["id"] = doc_id;
  out["path"] = GeorefPathName(result.path);
  if (!result.resolved()) {
    out["key"] = nullptr;
    out["resolution"] = nullptr;
    out["bbox"] = nullptr;
    out["boundary"] = nullptr;
    return out;
  }
  const BBox &b = result.boundary->bbox;
  out["key"] = KeyToJson(result.key);
  out["resolution"] = result.key.section ? "1x1" : "6x6";
  out["fallback"] = result.fallback();
  out["ambiguous"] = result.ambiguous;
  out["bbox"] = {b.min_lon, b.min_lat, b.max_lon, b.max_lat};
  out["boundary"] = ToGeoJson(result.boundary->shape);
  return out;
}

Json GeorefFeature(const std::string &doc_id, const GeorefResult &result) {
  Json properties{{"id", doc_id},
                  {"key", result.key.ToString()},
                  {"resolution", result.key.section ? "1x1" : "6x6"},
                  {"path", GeorefPathName(result.path)}};
  return Json{{"type", "Feature"},
              {"properties", properties},
              {"geometry", ToGeoJson(result.boundary->shape)}};
}

}  // namespace deedscan
