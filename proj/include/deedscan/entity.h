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

#ifndef DEEDSCAN_ENTITY_H_
#define DEEDSCAN_ENTITY_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace deedscan {

// Half-open character range [start, end) in Unicode scalar values.
struct Span {
  size_t start = 0;
  size_t end = 0;

  size_t length() const { return end > start ? end - start : 0; }
  bool operator==(const Span &) const = default;
  auto operator<=>(const Span &) const = default;
};

inline size_t OverlapLength(Span a, Span b) {
  size_t lo = a.start > b.start ? a.start : b.start;
  size_t hi = a.end < b.end ? a.end : b.end;
  return hi > lo ? hi - lo : 0;
}

// The seven geoentity classes found in deed legal descriptions. The first
// four belong to the recorded plat system, the last three to the public land
// survey grid.
enum class EntityClass {
  kState,
  kCounty,
  kCity,
  kSubdivision,
  kTownship,
  kRange,
  kSection,
};

inline constexpr std::array<EntityClass, 7> kAllEntityClasses = {
    EntityClass::kState,       EntityClass::kCounty,   EntityClass::kCity,
    EntityClass::kSubdivision, EntityClass::kTownship, EntityClass::kRange,
    EntityClass::kSection,
};

std::string_view EntityClassName(EntityClass cls);

// Accepts the canonical names ("State", ..., "Section") case-insensitively.
std::optional<EntityClass> ParseEntityClass(std::string_view name);

inline bool IsPlssClass(EntityClass cls) {
  return cls == EntityClass::kTownship || cls == EntityClass::kRange ||
         cls == EntityClass::kSection;
}

}  // namespace deedscan

#endif  // DEEDSCAN_ENTITY_H_
