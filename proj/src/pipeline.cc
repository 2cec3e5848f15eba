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

#include "deedscan/pipeline.h"

#include <fstream>
#include <memory>
#include <sstream>

#include "deedscan/corpus.h"
#include "deedscan/gazetteer.h"
#include "deedscan/geoner.h"
#include "deedscan/georef.h"
#include "deedscan/plss.h"
#include "deedscan/subdiv.h"
#include "deedscan/text.h"

namespace deedscan {

namespace fs = std::filesystem;

PlssSource ParsePlssSource(std::string_view source) {
  size_t colon = source.rfind(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == source.size()) {
    throw Error("PLSS source '" + std::string(source) +
                "' must have the form <geojson>:<bindings>");
  }
  return {fs::path(source.substr(0, colon)), fs::path(source.substr(colon + 1))};
}

namespace {

fs::path Resolve(const fs::path &base_dir, const fs::path &p) {
  if (p.empty() || p.is_absolute() || base_dir.empty()) return p;
  return base_dir / p;
}

fs::path PathField(const Json &value, const char *key, const fs::path &base) {
  if (!value.is_string()) {
    throw Error(std::string("config key '") + key + "' must be a string path");
  }
  return Resolve(base, value.get<std::string>());
}

double UnitField(const Json &value, const char *key, bool allow_zero) {
  if (!value.is_number()) {
    throw Error(std::string("config key '") + key + "' must be a number");
  }
  double v = value.get<double>();
  if (v > 1 || v < 0 || (!allow_zero && v == 0)) {
    throw Error(std::string("config key '") + key + "' must lie in " +
                (allow_zero ? "[0, 1]" : "(0, 1]"));
  }
  return v;
}

size_t CountField(const Json &value, const char *key, size_t min) {
  if (!value.is_number_integer() || value.get<long long>() < static_cast<long long>(min)) {
    throw Error(std::string("config key '") + key + "' must be an integer >= " +
                std::to_string(min));
  }
  return value.get<size_t>();
}

// Loaded once per run and shared read-only across worker threads.
struct Resources {
  std::vector<Document> docs;
  std::unique_ptr<Lexicon> lexicon;
  std::vector<ContextRule> rules;
  std::unique_ptr<Gazetteer> gazetteer;
  std::unique_ptr<AbbreviationTable> abbreviations;
  std::unique_ptr<SubdivisionMatcher> matcher;
  std::unique_ptr<PlssIndex> index;
};

void LoadDetection(const RunConfig &config, Resources &res) {
  res.lexicon = std::make_unique<Lexicon>(Lexicon::Load(config.lexicon));
  if (!config.rules.empty()) res.rules = LoadContextRules(config.rules);
}

void LoadGeo(const RunConfig &config, Resources &res) {
  res.gazetteer = std::make_unique<Gazetteer>(Gazetteer::Load(config.gazetteer));
  res.abbreviations = std::make_unique<AbbreviationTable>(
      config.abbreviations.empty() ? AbbreviationTable::Default()
                                   : AbbreviationTable::Load(config.abbreviations));
  res.matcher = std::make_unique<SubdivisionMatcher>(
      *res.gazetteer, *res.abbreviations, config.subdivision_threshold);
  res.index = std::make_unique<PlssIndex>();
  for (const PlssSource &src : config.plss) {
    res.index->AddDataset(src.data, LoadFieldBindings(src.bindings));
  }
  res.index->Finalize();
}

struct DocOutput {
  std::optional<Detection> detection;
  std::optional<Extraction> extraction;
  std::optional<GeorefResult> georef;
};

std::vector<DocOutput> Process(const RunConfig &config, const Resources &res) {
  std::optional<GeoExtractor> extractor;
  if (res.gazetteer) extractor.emplace(res.gazetteer.get(), res.matcher.get(), GeonerConfig{});
  return ParallelMap(res.docs.size(), config.jobs, [&](size_t i) {
    const Document &doc = res.docs[i];
    DocOutput out;
    if (res.lexicon) out.detection = Detect(doc, *res.lexicon, res.rules, config.detector);
    if (extractor) {
      out.extraction = extractor->Extract(doc);
      out.georef = Georeference(*out.extraction, *res.index);
    }
    return out;
  });
}

std::string JsonLines(const std::vector<Json> &records) {
  std::string out;
  for (const Json &r : records) {
    out += r.dump();
    out += '\n';
  }
  return out;
}

void EnsureOutDir(const RunConfig &config) {
  std::error_code ec;
  fs::create_directories(config.out, ec);
  if (ec || !fs::is_directory(config.out)) {
    throw Error("cannot create output directory " + config.out.string());
  }
}

std::string WriteDetections(const RunConfig &config, const Resources &res,
                            const std::vector<DocOutput> &outputs) {
  std::vector<Json> records;
  size_t flagged = 0;
  for (size_t i = 0; i < outputs.size(); ++i) {
    records.push_back(DetectionToJson(res.docs[i].id(), *outputs[i].detection));
    flagged += outputs[i].detection->doc_flag;
  }
  WriteFileAtomic(config.out / "detections.jsonl", JsonLines(records));
  return "flagged " + std::to_string(flagged) + "/" + std::to_string(outputs.size());
}

std::string WriteGeoref(const RunConfig &config, const Resources &res,
                        const std::vector<DocOutput> &outputs) {
  std::vector<Json> entities;
  std::vector<Json> georef;
  Json features = Json::array();
  size_t section = 0;
  size_t township = 0;
  size_t unresolved = 0;
  for (size_t i = 0; i < outputs.size(); ++i) {
    const std::string &id = res.docs[i].id();
    const GeorefResult &result = *outputs[i].georef;
    entities.push_back(ExtractionToJson(id, *outputs[i].extraction));
    georef.push_back(GeorefToJson(id, result));
    if (!result.resolved()) {
      ++unresolved;
      continue;
    }
    features.push_back(GeorefFeature(id, result));
    if (result.resolution() == Resolution::kSection) ++section;
    if (result.township != nullptr) ++township;
  }
  WriteFileAtomic(config.out / "entities.jsonl", JsonLines(entities));
  WriteFileAtomic(config.out / "georef.jsonl", JsonLines(georef));
  Json collection{{"type", "FeatureCollection"}, {"features", features}};
  WriteFileAtomic(config.out / "georef.geojson", collection.dump() + "\n");
  return "1×1: " + std::to_string(section) + ", 6×6: " +
         std::to_string(township) + ", unresolved: " + std::to_string(unresolved);
}

SystemPredictions InternalPredictions(const Resources &res,
                                      const std::vector<DocOutput> &outputs) {
  SystemPredictions preds;
  preds.name = "pipeline";
  preds.has_detection = res.lexicon != nullptr;
  preds.has_entities = res.gazetteer != nullptr;
  preds.has_georef = res.gazetteer != nullptr;
  for (size_t i = 0; i < outputs.size(); ++i) {
    DocumentPrediction p;
    if (outputs[i].detection) {
      p.term_spans = outputs[i].detection->AcceptedSpans();
      p.doc_flag = outputs[i].detection->doc_flag;
    }
    if (outputs[i].extraction) {
      for (const EntityMention &m : outputs[i].extraction->entities) {
        p.entities.push_back({m.cls, m.span, m.Value()});
      }
      p.has_subdivision = outputs[i].extraction->has_subdivision();
      p.georef = outputs[i].georef;
    }
    preds.documents.emplace(res.docs[i].id(), std::move(p));
  }
  return preds;
}

SystemPredictions ExternalPredictions(const RunConfig &config) {
  SystemPredictions preds;
  preds.name = config.predictions_name;
  preds.has_detection = true;
  for (PredictionRecord &r : LoadPredictions(config.predictions)) {
    if (preds.documents.count(r.doc_id)) {
      throw Error(config.predictions.string() + ": duplicate id '" + r.doc_id + "'");
    }
    preds.has_entities |= r.has_entities;
    DocumentPrediction p;
    p.term_spans = std::move(r.term_spans);
    p.doc_flag = r.doc_flag;
    p.entities = std::move(r.entities);
    preds.documents.emplace(r.doc_id, std::move(p));
  }
  return preds;
}

std::string Evaluate(const RunConfig &config, const Resources &res,
                     const std::vector<DocOutput> *outputs, std::string *text) {
  std::vector<GoldAnnotation> gold = LoadGold(config.gold);
  EvalReport report;
  std::vector<std::string> unknown;
  if (outputs != nullptr) {
    report.systems.push_back(
        EvaluateSystem(res.docs, gold, InternalPredictions(res, *outputs), &unknown));
  }
  if (!config.predictions.empty()) {
    report.systems.push_back(EvaluateSystem(res.docs, gold, ExternalPredictions(config),
                                            outputs != nullptr ? nullptr : &unknown));
    report.notes.push_back(
        "recall is measured for every system, including baselines whose "
        "recall is conventionally assumed to be 100%");
  }
  if (!res.docs.empty() && !unknown.empty()) {
    report.notes.push_back(std::to_string(unknown.size()) +
                           " gold document(s) absent from the corpus; spans not "
                           "bounds-checked");
  }
  std::string rendered = RenderText(report);
  WriteFileAtomic(config.out / "report.txt", rendered);
  WriteFileAtomic(config.out / "report.json", RenderJson(report).dump(2) + "\n");
  if (text != nullptr) *text += rendered;
  return "evaluated " + std::to_string(report.systems.size()) + " system(s) on " +
         std::to_string(gold.size()) + " gold document(s)";
}

}  // namespace

RunConfig ParseRunConfig(const Json &config, const fs::path &base_dir,
                         RunConfig base) {
  if (!config.is_object()) throw Error("config must be a JSON object");
  RunConfig out = std::move(base);
  for (const auto &[key, value] : config.items()) {
    if (key == "corpus") out.corpus = PathField(value, "corpus", base_dir);
    else if (key == "lexicon") out.lexicon = PathField(value, "lexicon", base_dir);
    else if (key == "rules") out.rules = PathField(value, "rules", base_dir);
    else if (key == "gazetteer") out.gazetteer = PathField(value, "gazetteer", base_dir);
    else if (key == "abbreviations") {
      out.abbreviations = PathField(value, "abbreviations", base_dir);
    } else if (key == "gold") out.gold = PathField(value, "gold", base_dir);
    else if (key == "predictions") {
      out.predictions = PathField(value, "predictions", base_dir);
    } else if (key == "out") out.out = PathField(value, "out", base_dir);
    else if (key == "predictions_name") {
      if (!value.is_string() || value.get<std::string>().empty()) {
        throw Error("config key 'predictions_name' must be a non-empty string");
      }
      out.predictions_name = value.get<std::string>();
    } else if (key == "plss") {
      if (!value.is_array()) throw Error("config key 'plss' must be an array");
      out.plss.clear();
      for (const Json &item : value) {
        PlssSource src;
        if (item.is_string()) {
          src = ParsePlssSource(item.get<std::string>());
        } else if (item.is_object()) {
          src.data = PathField(RequireField(item, "data"), "plss.data", {});
          src.bindings = PathField(RequireField(item, "bindings"), "plss.bindings", {});
        } else {
          throw Error("config key 'plss' entries must be strings or objects");
        }
        src.data = Resolve(base_dir, src.data);
        src.bindings = Resolve(base_dir, src.bindings);
        out.plss.push_back(std::move(src));
      }
    } else if (key == "similarity_threshold") {
      out.detector.similarity_threshold = UnitField(value, "similarity_threshold", false);
    } else if (key == "context_threshold") {
      out.detector.context_threshold = UnitField(value, "context_threshold", true);
    } else if (key == "subdivision_threshold") {
      out.subdivision_threshold = UnitField(value, "subdivision_threshold", false);
    } else if (key == "min_fuzzy_length") {
      out.detector.min_fuzzy_length = CountField(value, "min_fuzzy_length", 1);
    } else if (key == "jobs") {
      out.jobs = CountField(value, "jobs", 1);
    } else {
      throw Error("unknown config key '" + key + "'");
    }
  }
  return out;
}

RunConfig LoadRunConfig(const fs::path &path, RunConfig base) {
  Json config;
  try {
    config = Json::parse(ReadFile(path));
  } catch (const Json::exception &e) {
    throw Error(path.string() + ": " + e.what());
  }
  try {
    return ParseRunConfig(config, path.parent_path(), std::move(base));
  } catch (const Error &e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void ValidateRunConfig(const RunConfig &config, Command command) {
  auto require = [](const fs::path &p, const char *what) {
    if (p.empty()) throw Error(std::string("no ") + what + " configured");
  };
  bool detect = command == Command::kDetect || command == Command::kPipeline;
  bool georef = command == Command::kGeoref || command == Command::kPipeline;
  if (detect || georef) require(config.corpus, "corpus");
  if (detect) require(config.lexicon, "lexicon");
  if (georef) {
    require(config.gazetteer, "gazetteer");
    if (config.plss.empty()) throw Error("no PLSS dataset configured");
  }
  if (command == Command::kEval) {
    require(config.gold, "gold");
    bool internal = !config.corpus.empty() && !config.lexicon.empty();
    if (!internal && config.predictions.empty()) {
      throw Error("eval needs predictions or a corpus and lexicon");
    }
  }
  if (config.jobs == 0) throw Error("jobs must be at least 1");

  std::vector<std::pair<const char *, fs::path>> inputs = {
      {"corpus", config.corpus},       {"lexicon", config.lexicon},
      {"rules", config.rules},         {"gazetteer", config.gazetteer},
      {"abbreviations", config.abbreviations}, {"gold", config.gold},
      {"predictions", config.predictions}};
  for (const PlssSource &src : config.plss) {
    inputs.emplace_back("PLSS dataset", src.data);
    inputs.emplace_back("PLSS bindings", src.bindings);
  }
  for (const auto &[what, path] : inputs) {
    if (path.empty()) continue;
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
      throw Error(std::string(what) + " not found: " + path.string());
    }
  }
}

std::string RunDetect(const RunConfig &config) {
  ValidateRunConfig(config, Command::kDetect);
  Resources res;
  res.docs = LoadCorpus(config.corpus);
  LoadDetection(config, res);
  EnsureOutDir(config);
  return WriteDetections(config, res, Process(config, res));
}

std::string RunGeoref(const RunConfig &config) {
  ValidateRunConfig(config, Command::kGeoref);
  Resources res;
  res.docs = LoadCorpus(config.corpus);
  LoadGeo(config, res);
  EnsureOutDir(config);
  return WriteGeoref(config, res, Process(config, res));
}

std::string RunEval(const RunConfig &config, std::string *report) {
  ValidateRunConfig(config, Command::kEval);
  Resources res;
  std::optional<std::vector<DocOutput>> outputs;
  if (!config.corpus.empty()) res.docs = LoadCorpus(config.corpus);
  if (!config.corpus.empty() && !config.lexicon.empty()) {
    LoadDetection(config, res);
    if (!config.gazetteer.empty() && !config.plss.empty()) LoadGeo(config, res);
    outputs = Process(config, res);
  }
  EnsureOutDir(config);
  return Evaluate(config, res, outputs ? &*outputs : nullptr, report);
}

std::vector<std::string> RunPipeline(const RunConfig &config, std::string *report) {
  ValidateRunConfig(config, Command::kPipeline);
  Resources res;
  res.docs = LoadCorpus(config.corpus);
  LoadDetection(config, res);
  LoadGeo(config, res);
  EnsureOutDir(config);
  std::vector<DocOutput> outputs = Process(config, res);
  std::vector<std::string> summary;
  summary.push_back(WriteDetections(config, res, outputs));
  summary.push_back(WriteGeoref(config, res, outputs));
  if (!config.gold.empty()) {
    summary.push_back(Evaluate(config, res, &outputs, report));
  }
  return summary;
}

}  // namespace deedscan
