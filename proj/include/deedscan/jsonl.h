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

#ifndef DEEDSCAN_JSONL_H_
#define DEEDSCAN_JSONL_H_

#include <filesystem>
#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace deedscan {

using Json = nlohmann::json;

// Invokes fn(line_number, record) for every non-blank line of a
// line-delimited JSON stream. Line numbers are 1-based. Parse failures and
// errors thrown by fn are rethrown as Error prefixed with "name:line: ".
using JsonLineFn = std::function<void(size_t, const Json &)>;
void ForEachJsonLine(std::istream &in, std::string_view name,
                     const JsonLineFn &fn);
void ForEachJsonLine(const std::filesystem::path &path, const JsonLineFn &fn);

std::string ReadFile(const std::filesystem::path &path);

// Writes content to a sibling temporary file and renames it over path, so a
// reader never observes a partially written file.
void WriteFileAtomic(const std::filesystem::path &path,
                     std::string_view content);

// Field accessors that throw Error naming the field on type mismatch.
const Json &RequireField(const Json &record, const char *field);
std::string RequireString(const Json &record, const char *field);

}  // namespace deedscan

#endif  // DEEDSCAN_JSONL_H_
