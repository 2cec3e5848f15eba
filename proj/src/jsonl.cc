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

#include "deedscan/jsonl.h"

#include <fstream>
#include <sstream>

#include "deedscan/text.h"

namespace deedscan {

void ForEachJsonLine(std::istream &in, std::string_view name,
                     const JsonLineFn &fn) {
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::string prefix = std::string(name) + ":" + std::to_string(line_no);
    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::exception &e) {
      throw Error(prefix + ": malformed record: " + e.what());
    }
    if (!record.is_object()) {
      throw Error(prefix + ": malformed record: expected a JSON object");
    }
    try {
      fn(line_no, record);
    } catch (const Json::exception &e) {
      throw Error(prefix + ": malformed record: " + e.what());
    } catch (const Error &e) {
      throw Error(prefix + ": " + e.what());
    }
  }
}

void ForEachJsonLine(const std::filesystem::path &path, const JsonLineFn &fn) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  ForEachJsonLine(in, path.string(), fn);
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFileAtomic(const std::filesystem::path &path,
                     std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot rename " + tmp.string() + ": " + ec.message());
  }
}

const Json &RequireField(const Json &record, const char *field) {
  auto it = record.find(field);
  if (it == record.end()) {
    throw Error(std::string("missing field '") + field + "'");
  }
  return *it;
}

std::string RequireString(const Json &record, const char *field) {
  const Json &value = RequireField(record, field);
  if (!value.is_string()) {
    throw Error(std::string("field '") + field + "' must be a string");
  }
  return value.get<std::string>();
}

}  // namespace deedscan
