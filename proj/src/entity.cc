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

#include "deedscan/entity.h"

#include "deedscan/text.h"

namespace deedscan {

std::string_view EntityClassName(EntityClass cls) {
  switch (cls) {
    case EntityClass::kState: return "State";
    case EntityClass::kCounty: return "County";
    case EntityClass::kCity: return "City";
    case EntityClass::kSubdivision: return "Subdivision";
    case EntityClass::kTownship: return "Township";
    case EntityClass::kRange: return "Range";
    case EntityClass::kSection: return "Section";
  }
  return "";
}

std::optional<EntityClass> ParseEntityClass(std::string_view name) {
  std::string lowered = NormalizeWord(name);
  for (EntityClass cls : kAllEntityClasses) {
    if (NormalizeWord(EntityClassName(cls)) == lowered) return cls;
  }
  return std::nullopt;
}

}  // namespace deedscan
