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

#ifndef DEEDSCAN_PLSS_H_
#define DEEDSCAN_PLSS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "deedscan/geometry.h"
#include "deedscan/jsonl.h"

namespace deedscan {

// Public Land Survey System identifier. A key without a section names a
// roughly 6x6 mile township block; with a section, one of its 36 roughly
// 1x1 mile sections.
struct PlssKey {
  // Canonical state name; empty when unknown.
  std::string state;
  int township = 0;
  char township_dir = 'N';
  int range = 0;
  // 'E' or 'W'; 0 when unknown.
  char range_dir = 0;
  std::optional<int> section;

  PlssKey Tuple() const {
    PlssKey key = *this;
    key.section.reset();
    return key;
  }

  // "Minnesota T28N R23W S25"
  std::string ToString() const;
  bool operator==(const PlssKey &) const = default;
};

enum class Resolution { kTownship, kSection, kSubdivision };

const char *ResolutionName(Resolution resolution);

struct GeoBoundary {
  MultiPolygon shape;
  BBox bbox;
  Resolution resolution = Resolution::kTownship;
};

GeoBoundary MakeBoundary(MultiPolygon shape, Resolution resolution);

// Names of the feature properties that hold survey values in one state's
// dataset, and how their direction codes read.
struct FieldBindings {
  std::string state;
  std::string township_field;
  std::string township_dir_field;  // optional
  std::string range_field;
  std::string range_dir_field;     // optional
  std::string section_field;       // optional
  // Raw property value -> 'N'/'S'/'E'/'W'. Values not listed are read as
  // direction words or letters.
  std::map<std::string, char> direction_values;
  char default_township_dir = 'N';
  char default_range_dir = 0;
};

// JSON object: {state, township, township_dir?, range, range_dir?,
// section?, direction_values?, default_township_dir?, default_range_dir?}.
FieldBindings ParseFieldBindings(const Json &config);
FieldBindings LoadFieldBindings(const std::filesystem::path &path);

struct ResolveResult {
  // The key as resolved; the state is filled in when it was unknown.
  PlssKey key;
  const GeoBoundary *boundary = nullptr;
  // Several states matched and the first was taken.
  bool ambiguous = false;

  bool found() const { return boundary != nullptr; }
};

class PlssIndex {
 public:
  // Adds every feature of a GeoJSON FeatureCollection. Features with a
  // section value index a section; the others a township. Features missing
  // a bound township or range value are skipped and counted. Throws on a
  // duplicate key or unparseable geometry.
  void AddDataset(const Json &collection, const FieldBindings &bindings);
  void AddDataset(const std::filesystem::path &path,
                  const FieldBindings &bindings);

  // Synthesizes township boundaries from their sections where a dataset
  // has only sections, then checks that every section's bbox lies in its
  // township's bbox grown by epsilon.
  void Finalize(double epsilon = 1e-6);

  // Section boundary when the key has a section, township boundary
  // otherwise. An empty state matches any state; range_dir 0 matches either
  // direction. Several matches resolve to the first state alphabetically
  // and set `ambiguous`.
  ResolveResult Resolve(const PlssKey &key) const;

  size_t township_count() const { return townships_.size(); }
  size_t section_count() const;
  size_t skipped() const { return skipped_; }

  // Visits every indexed section with its township.
  template <typename Fn>
  void ForEachSection(Fn fn) const {
    for (const auto &[id, entry] : townships_) {
      for (const auto &[section, boundary] : entry.sections) {
        PlssKey key{std::get<0>(id), std::get<1>(id), std::get<2>(id),
                    std::get<3>(id), std::get<4>(id), section};
        fn(key, boundary, *entry.township);
      }
    }
  }

 private:
  using TownshipId = std::tuple<std::string, int, char, int, char>;
  struct Entry {
    std::optional<GeoBoundary> township;
    std::map<int, GeoBoundary> sections;
  };

  std::map<TownshipId, Entry> townships_;
  size_t skipped_ = 0;
};

}  // namespace deedscan

#endif  // DEEDSCAN_PLSS_H_
