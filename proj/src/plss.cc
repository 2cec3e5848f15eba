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

#include "deedscan/plss.h"

#include <cctype>

#include "deedscan/text.h"

namespace deedscan {

namespace {

std::optional<int> ReadInt(const Json &value) {
  if (value.is_number_integer()) return value.get<int>();
  if (value.is_number_float()) {
    double d = value.get<double>();
    if (d == static_cast<int>(d)) return static_cast<int>(d);
    return std::nullopt;
  }
  if (!value.is_string()) return std::nullopt;
  std::string s = value.get<std::string>();
  size_t i = s.find_first_not_of(' ');
  if (i == std::string::npos || !std::isdigit(static_cast<unsigned char>(s[i]))) {
    return std::nullopt;
  }
  int n = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    n = n * 10 + (s[i] - '0');
    if (n > 100000) return std::nullopt;
    ++i;
  }
  if (s.find_first_not_of(' ', i) != std::string::npos) return std::nullopt;
  return n;
}

std::string RawString(const Json &value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::optional<char> ReadDirection(const Json &value, const FieldBindings &b,
                                  const std::string &allowed) {
  std::string raw = RawString(value);
  auto it = b.direction_values.find(raw);
  char dir = 0;
  if (it != b.direction_values.end()) {
    dir = it->second;
  } else {
    size_t i = raw.find_first_not_of(' ');
    if (i != std::string::npos) {
      dir = static_cast<char>(std::toupper(static_cast<unsigned char>(raw[i])));
    }
  }
  if (allowed.find(dir) == std::string::npos || dir == 0) return std::nullopt;
  return dir;
}

const Json *Property(const Json &properties, const std::string &field) {
  if (field.empty() || !properties.is_object()) return nullptr;
  auto it = properties.find(field);
  if (it == properties.end() || it->is_null()) return nullptr;
  return &*it;
}

char ParseDirChar(const Json &config, const char *field, char fallback,
                  const std::string &allowed) {
  if (!config.contains(field)) return fallback;
  std::string s = config[field].get<std::string>();
  if (s.empty()) return 0;
  char dir = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (allowed.find(dir) == std::string::npos) {
    throw Error(std::string("field bindings: invalid ") + field + " '" + s + "'");
  }
  return dir;
}

}  // namespace

std::string PlssKey::ToString() const {
  std::string out = state.empty() ? "?" : state;
  out += " T" + std::to_string(township);
  if (township_dir) out += township_dir;
  out += " R" + std::to_string(range);
  if (range_dir) out += range_dir;
  if (section) out += " S" + std::to_string(*section);
  return out;
}

const char *ResolutionName(Resolution resolution) {
  switch (resolution) {
    case Resolution::kTownship: return "township";
    case Resolution::kSection: return "section";
    case Resolution::kSubdivision: return "subdivision";
  }
  return "";
}

GeoBoundary MakeBoundary(MultiPolygon shape, Resolution resolution) {
  GeoBoundary boundary;
  boundary.bbox = BoundingBox(shape);
  boundary.shape = std::move(shape);
  boundary.resolution = resolution;
  return boundary;
}

FieldBindings ParseFieldBindings(const Json &config) {
  if (!config.is_object()) throw Error("field bindings must be a JSON object");
  FieldBindings b;
  b.state = RequireString(config, "state");
  b.township_field = RequireString(config, "township");
  b.range_field = RequireString(config, "range");
  b.township_dir_field = config.value("township_dir", "");
  b.range_dir_field = config.value("range_dir", "");
  b.section_field = config.value("section", "");
  if (config.contains("direction_values")) {
    for (const auto &[raw, dir] : config["direction_values"].items()) {
      std::string d = dir.get<std::string>();
      if (d.empty() || std::string("NSEW").find(static_cast<char>(
                           std::toupper(static_cast<unsigned char>(d[0])))) ==
                           std::string::npos) {
        throw Error("field bindings: invalid direction value '" + d + "'");
      }
      b.direction_values[raw] =
          static_cast<char>(std::toupper(static_cast<unsigned char>(d[0])));
    }
  }
  b.default_township_dir = ParseDirChar(config, "default_township_dir", 'N', "NS");
  b.default_range_dir = ParseDirChar(config, "default_range_dir", 0, "EW");
  if (b.range_dir_field.empty() && b.default_range_dir == 0) {
    throw Error("field bindings for " + b.state +
                ": need range_dir or default_range_dir");
  }
  return b;
}

FieldBindings LoadFieldBindings(const std::filesystem::path &path) {
  Json config;
  try {
    config = Json::parse(ReadFile(path));
  } catch (const Json::exception &e) {
    throw Error(path.string() + ": " + e.what());
  }
  try {
    return ParseFieldBindings(config);
  } catch (const Json::exception &e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void PlssIndex::AddDataset(const Json &collection, const FieldBindings &b) {
  if (!collection.is_object() || collection.value("type", "") != "FeatureCollection" ||
      !collection.contains("features") || !collection["features"].is_array()) {
    throw Error("PLSS dataset must be a GeoJSON FeatureCollection");
  }
  size_t feature_no = 0;
  for (const Json &feature : collection["features"]) {
    ++feature_no;
    static const Json kNoProperties;
    const Json &props =
        feature.contains("properties") ? feature["properties"] : kNoProperties;
    const Json *t = Property(props, b.township_field);
    const Json *r = Property(props, b.range_field);
    int township = t ? ReadInt(*t).value_or(0) : 0;
    int range = r ? ReadInt(*r).value_or(0) : 0;
    if (township <= 0 || range <= 0) {
      ++skipped_;
      continue;
    }
    char tdir = b.default_township_dir;
    if (const Json *v = Property(props, b.township_dir_field)) {
      auto dir = ReadDirection(*v, b, "NS");
      if (!dir) {
        ++skipped_;
        continue;
      }
      tdir = *dir;
    }
    char rdir = b.default_range_dir;
    if (const Json *v = Property(props, b.range_dir_field)) {
      auto dir = ReadDirection(*v, b, "EW");
      if (!dir) {
        ++skipped_;
        continue;
      }
      rdir = *dir;
    }
    if (rdir == 0) {
      ++skipped_;
      continue;
    }
    std::optional<int> section;
    if (const Json *v = Property(props, b.section_field)) {
      section = ReadInt(*v);
      if (!section || *section < 0 || *section > 36) {
        ++skipped_;
        continue;
      }
      // Zero marks a township-level feature.
      if (*section == 0) section.reset();
    }

    PlssKey key{b.state, township, tdir, range, rdir, section};
    MultiPolygon shape;
    try {
      shape = ParseGeoJsonGeometry(RequireField(feature, "geometry"));
    } catch (const Error &e) {
      throw Error("feature " + std::to_string(feature_no) + " (" +
                  key.ToString() + "): " + e.what());
    }
    Entry &entry = townships_[{b.state, township, tdir, range, rdir}];
    if (section) {
      auto [it, inserted] = entry.sections.emplace(
          *section, MakeBoundary(std::move(shape), Resolution::kSection));
      if (!inserted) throw Error("duplicate PLSS key " + key.ToString());
    } else {
      if (entry.township) throw Error("duplicate PLSS key " + key.ToString());
      entry.township = MakeBoundary(std::move(shape), Resolution::kTownship);
    }
  }
}

void PlssIndex::AddDataset(const std::filesystem::path &path,
                           const FieldBindings &bindings) {
  Json collection;
  try {
    collection = Json::parse(ReadFile(path));
  } catch (const Json::exception &e) {
    throw Error(path.string() + ": unparseable GeoJSON: " + e.what());
  }
  try {
    AddDataset(collection, bindings);
  } catch (const Error &e) {
    throw Error(path.string() + ": " + e.what());
  } catch (const Json::exception &e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void PlssIndex::Finalize(double epsilon) {
  for (auto &[id, entry] : townships_) {
    if (!entry.township) {
      MultiPolygon shape;
      for (const auto &[section, boundary] : entry.sections) {
        shape.insert(shape.end(), boundary.shape.begin(), boundary.shape.end());
      }
      entry.township = MakeBoundary(std::move(shape), Resolution::kTownship);
    }
    for (const auto &[section, boundary] : entry.sections) {
      if (!entry.township->bbox.Contains(boundary.bbox, epsilon)) {
        PlssKey key{std::get<0>(id), std::get<1>(id), std::get<2>(id),
                    std::get<3>(id), std::get<4>(id), section};
        throw Error("section " + key.ToString() +
                    " lies outside its township's bounding box");
      }
    }
  }
}

size_t PlssIndex::section_count() const {
  size_t n = 0;
  for (const auto &[id, entry] : townships_) n += entry.sections.size();
  return n;
}

ResolveResult PlssIndex::Resolve(const PlssKey &key) const {
  ResolveResult result;
  result.key = key;
  size_t matches = 0;
  for (const auto &[id, entry] : townships_) {
    const auto &[state, township, tdir, range, rdir] = id;
    if (!key.state.empty() && key.state != state) continue;
    if (township != key.township || tdir != key.township_dir) continue;
    if (range != key.range) continue;
    if (key.range_dir != 0 && key.range_dir != rdir) continue;
    const GeoBoundary *boundary = nullptr;
    if (key.section) {
      auto it = entry.sections.find(*key.section);
      if (it != entry.sections.end()) boundary = &it->second;
    } else if (entry.township) {
      boundary = &*entry.township;
    }
    if (boundary == nullptr) continue;
    if (++matches == 1) {
      result.boundary = boundary;
      result.key.state = state;
      result.key.range_dir = rdir;
    }
  }
  result.ambiguous = matches > 1;
  return result;
}

}  // namespace deedscan
