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

// Command-line driver: detect, georef, eval, numerals, pipeline.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "deedscan/numerals.h"
#include "deedscan/pipeline.h"
#include "deedscan/text.h"

namespace {

using deedscan::Json;

// Flag values collected before the config file is known. Each set flag
// becomes a key in an overrides object applied on top of the file.
struct Flags {
  std::string config;
  std::optional<std::string> corpus, lexicon, rules, gazetteer, abbreviations,
      gold, predictions, predictions_name, out;
  std::vector<std::string> plss;
  std::optional<double> similarity, context, subdivision;
  std::optional<size_t> jobs, min_fuzzy_length;
};

void AddRunOptions(CLI::App *cmd, Flags &f) {
  cmd->add_option("--config", f.config,
                  "JSON run configuration (default: $DEEDSCAN_CONFIG)");
  cmd->add_option("--corpus", f.corpus, "corpus JSONL");
  cmd->add_option("--lexicon", f.lexicon, "term lexicon");
  cmd->add_option("--rules", f.rules, "context rules JSONL");
  cmd->add_option("--gazetteer", f.gazetteer, "place gazetteer JSONL");
  cmd->add_option("--abbreviations", f.abbreviations, "subdivision abbreviation table");
  cmd->add_option("--plss", f.plss, "PLSS dataset as <geojson>:<bindings>; repeatable");
  cmd->add_option("--gold", f.gold, "gold annotations JSONL");
  cmd->add_option("--predictions", f.predictions, "external predictions JSONL");
  cmd->add_option("--predictions-name", f.predictions_name,
                  "report label for external predictions");
  cmd->add_option("--similarity-threshold", f.similarity, "fuzzy match threshold");
  cmd->add_option("--context-threshold", f.context, "context acceptance threshold");
  cmd->add_option("--subdivision-threshold", f.subdivision,
                  "subdivision match threshold");
  cmd->add_option("--min-fuzzy-length", f.min_fuzzy_length,
                  "shortest lexicon word matched fuzzily");
  cmd->add_option("-j,--jobs", f.jobs, "worker threads");
  cmd->add_option("-o,--out", f.out, "output directory");
}

deedscan::RunConfig BuildConfig(const Flags &f) {
  deedscan::RunConfig config;
  std::string path = f.config;
  if (path.empty()) {
    if (const char *env = std::getenv(deedscan::kConfigEnvVar)) path = env;
  }
  if (!path.empty()) {
    if (!std::filesystem::is_regular_file(path)) {
      throw deedscan::Error("config not found: " + path);
    }
    config = deedscan::LoadRunConfig(path);
  }

  Json overrides = Json::object();
  auto set = [&](const char *key, const auto &value) {
    if (value) overrides[key] = *value;
  };
  set("corpus", f.corpus);
  set("lexicon", f.lexicon);
  set("rules", f.rules);
  set("gazetteer", f.gazetteer);
  set("abbreviations", f.abbreviations);
  set("gold", f.gold);
  set("predictions", f.predictions);
  set("predictions_name", f.predictions_name);
  set("out", f.out);
  set("similarity_threshold", f.similarity);
  set("context_threshold", f.context);
  set("subdivision_threshold", f.subdivision);
  set("min_fuzzy_length", f.min_fuzzy_length);
  set("jobs", f.jobs);
  if (!f.plss.empty()) overrides["plss"] = f.plss;
  return deedscan::ParseRunConfig(overrides, {}, std::move(config));
}

int RunNumerals() {
  std::string line;
  while (std::getline(std::cin, line)) {
    auto parse = deedscan::ParseNumeral(deedscan::NormalizedWords(line));
    if (parse) {
      std::cout << parse->value << "\n";
    } else {
      std::cout << "NOPARSE\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"deedscan: restrictive-covenant detection and PLSS georeferencing"};
  app.require_subcommand(1);

  Flags flags;
  CLI::App *detect = app.add_subcommand("detect", "flag restrictive terms");
  CLI::App *georef = app.add_subcommand("georef", "extract and resolve legal descriptions");
  CLI::App *eval = app.add_subcommand("eval", "score predictions against gold");
  CLI::App *pipeline = app.add_subcommand("pipeline", "detect, georef and eval");
  app.add_subcommand("numerals", "parse one numeral phrase per stdin line");
  for (CLI::App *cmd : {detect, georef, eval, pipeline}) AddRunOptions(cmd, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("numerals")) return RunNumerals();
    deedscan::RunConfig config = BuildConfig(flags);
    if (app.got_subcommand(detect)) {
      std::cout << deedscan::RunDetect(config) << "\n";
    } else if (app.got_subcommand(georef)) {
      std::cout << deedscan::RunGeoref(config) << "\n";
    } else if (app.got_subcommand(eval)) {
      std::string report;
      std::string summary = deedscan::RunEval(config, &report);
      std::cout << report << summary << "\n";
    } else {
      std::string report;
      std::vector<std::string> summary = deedscan::RunPipeline(config, &report);
      std::cout << report;
      for (const std::string &line : summary) std::cout << line << "\n";
    }
  } catch (const std::exception &e) {
    std::cerr << "deedscan: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
