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

#ifndef DEEDSCAN_SIMILARITY_H_
#define DEEDSCAN_SIMILARITY_H_

#include <cstddef>
#include <string_view>

namespace deedscan {

// Unit-cost insert/delete/substitute edit distance over code points.
size_t LevenshteinDistance(std::u32string_view a, std::u32string_view b);

// 1 - distance / max(|a|, |b|); two empty strings are identical (1.0).
double Similarity(std::u32string_view a, std::u32string_view b);
double Similarity(std::string_view a, std::string_view b);

// Upper bound on Similarity(a, b) from the lengths alone.
inline double MaxSimilarity(size_t len_a, size_t len_b) {
  size_t longer = len_a > len_b ? len_a : len_b;
  size_t diff = len_a > len_b ? len_a - len_b : len_b - len_a;
  return longer == 0 ? 1.0 : 1.0 - static_cast<double>(diff) / longer;
}

}  // namespace deedscan

#endif  // DEEDSCAN_SIMILARITY_H_
