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

#ifndef DEEDSCAN_GAZETTEER_H_
#define DEEDSCAN_GAZETTEER_H_

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "deedscan/entity.h"

namespace deedscan {

struct GazetteerRecord {
  EntityClass cls = EntityClass::kState;
  std::string name;
  // Enclosing jurisdiction: a state for counties, a county or state for
  // cities and subdivisions. May be empty.
  std::string parent;
  std::vector<std::string> aliases;
};

// Place-name inventory for the recorded-plat classes (State, County, City,
// Subdivision). Lookups are over normalized words, so they ignore case and
// surrounding punctuation.
class Gazetteer {
 public:
  // Line-delimited records {class, name, parent, aliases[]}.
  static Gazetteer Parse(std::istream &in, std::string_view name);
  static Gazetteer Load(const std::filesystem::path &path);

  void Add(GazetteerRecord record);

  const std::vector<GazetteerRecord> &records() const { return records_; }

  // Indices of State/County/City records whose name or alias normalizes to
  // the given space-joined words.
  const std::vector<size_t> *Lookup(const std::string &normalized) const;

  // Longest name or alias among State/County/City records, in words.
  size_t max_name_words() const { return max_name_words_; }

  // Number of County records with this normalized name.
  size_t CountyCount(const std::string &normalized) const;

  // Indices of Subdivision records.
  const std::vector<size_t> &subdivisions() const { return subdivisions_; }

 private:
  std::vector<GazetteerRecord> records_;
  std::unordered_map<std::string, std::vector<size_t>> index_;
  std::vector<size_t> subdivisions_;
  size_t max_name_words_ = 0;
};

}  // namespace deedscan

#endif  // DEEDSCAN_GAZETTEER_H_
