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

#ifndef DEEDSCAN_PIPELINE_H_
#define DEEDSCAN_PIPELINE_H_

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "deedscan/detector.h"
#include "deedscan/evaluator.h"
#include "deedscan/jsonl.h"

namespace deedscan {

// Name of the environment variable holding the default config path.
inline constexpr const char *kConfigEnvVar = "DEEDSCAN_CONFIG";

struct PlssSource {
  std::filesystem::path data;
  std::filesystem::path bindings;
  bool operator==(const PlssSource &) const = default;
};

// "<geojson>:<bindings>". The split is at the last colon.
PlssSource ParsePlssSource(std::string_view source);

struct RunConfig {
  std::filesystem::path corpus;
  std::filesystem::path lexicon;
  std::filesystem::path rules;
  std::filesystem::path gazetteer;
  std::filesystem::path abbreviations;
  std::vector<PlssSource> plss;
  std::filesystem::path gold;
  std::filesystem::path predictions;
  std::string predictions_name = "external";

  DetectorConfig detector;
  double subdivision_threshold = 0.85;

  size_t jobs = 1;
  std::filesystem::path out = "out";
};

// Applies the keys present in `config` on top of `base`. Relative paths are
// resolved against `base_dir`. Unknown keys and ill-typed values throw.
RunConfig ParseRunConfig(const Json &config,
                         const std::filesystem::path &base_dir,
                         RunConfig base = {});
RunConfig LoadRunConfig(const std::filesystem::path &path, RunConfig base = {});

enum class Command { kDetect, kGeoref, kEval, kPipeline };

// Checks that every input the command needs is configured and that every
// configured path exists. Throws naming the first offending input.
void ValidateRunConfig(const RunConfig &config, Command command);

// Each returns the summary line printed by the CLI. Outputs go to
// config.out, each written via temp file and rename.
std::string RunDetect(const RunConfig &config);
std::string RunGeoref(const RunConfig &config);
// The report text is appended to *report when given.
std::string RunEval(const RunConfig &config, std::string *report = nullptr);
std::vector<std::string> RunPipeline(const RunConfig &config,
                                     std::string *report = nullptr);

// Calls fn(i) for i in [0, n) on up to `jobs` threads and returns the
// results in index order. The first exception thrown is rethrown.
template <typename Fn>
auto ParallelMap(size_t n, size_t jobs, Fn fn)
    -> std::vector<decltype(fn(size_t{0}))> {
  using Result = decltype(fn(size_t{0}));
  std::vector<std::optional<Result>> slots(n);
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  size_t threads = std::max<size_t>(1, std::min(jobs, n));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread &t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<Result> results;
  results.reserve(n);
  for (auto &slot : slots) results.push_back(std::move(*slot));
  return results;
}

}  // namespace deedscan

#endif  // DEEDSCAN_PIPELINE_H_
