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

#include "deedscan/gazetteer.h"

#include <algorithm>
#include <fstream>

#include "deedscan/jsonl.h"
#include "deedscan/text.h"

namespace deedscan {

Gazetteer Gazetteer::Parse(std::istream &in, std::string_view name) {
  Gazetteer gazetteer;
  ForEachJsonLine(in, name, [&](size_t, const Json &record) {
    GazetteerRecord entry;
    std::string cls = RequireString(record, "class");
    auto parsed = ParseEntityClass(cls);
    if (!parsed || IsPlssClass(*parsed)) {
      throw Error("gazetteer class must be State, County, City or "
                  "Subdivision, got '" + cls + "'");
    }
    entry.cls = *parsed;
    entry.name = RequireString(record, "name");
    if (record.contains("parent") && !record["parent"].is_null()) {
      entry.parent = record["parent"].get<std::string>();
    }
    if (record.contains("aliases")) {
      for (const Json &alias : record["aliases"]) {
        entry.aliases.push_back(alias.get<std::string>());
      }
    }
    gazetteer.Add(std::move(entry));
  });
  return gazetteer;
}

Gazetteer Gazetteer::Load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open gazetteer " + path.string());
  return Parse(in, path.string());
}

void Gazetteer::Add(GazetteerRecord record) {
  if (NormalizedWords(record.name).empty()) {
    throw Error("gazetteer record has an empty name");
  }
  size_t idx = records_.size();
  if (record.cls == EntityClass::kSubdivision) {
    subdivisions_.push_back(idx);
  } else {
    std::vector<std::string> names = record.aliases;
    names.push_back(record.name);
    for (const std::string &name : names) {
      std::vector<std::string> words = NormalizedWords(name);
      if (words.empty()) continue;
      max_name_words_ = std::max(max_name_words_, words.size());
      auto &slot = index_[Join(words, " ")];
      if (std::find(slot.begin(), slot.end(), idx) == slot.end()) {
        slot.push_back(idx);
      }
    }
  }
  records_.push_back(std::move(record));
}

const std::vector<size_t> *Gazetteer::Lookup(const std::string &normalized) const {
  auto it = index_.find(normalized);
  return it == index_.end() ? nullptr : &it->second;
}

size_t Gazetteer::CountyCount(const std::string &normalized) const {
  const std::vector<size_t> *hits = Lookup(normalized);
  if (hits == nullptr) return 0;
  return std::count_if(hits->begin(), hits->end(), [&](size_t idx) {
    return records_[idx].cls == EntityClass::kCounty;
  });
}

}  // namespace deedscan
