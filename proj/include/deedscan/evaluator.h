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

#ifndef DEEDSCAN_EVALUATOR_H_
#define DEEDSCAN_EVALUATOR_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deedscan/corpus.h"
#include "deedscan/georef.h"
#include "deedscan/jsonl.h"

namespace deedscan {

struct ConfusionCounts {
  size_t tp = 0;
  size_t fp = 0;
  size_t fn = 0;
  // Only meaningful for document-level counts.
  size_t tn = 0;

  ConfusionCounts &operator+=(const ConfusionCounts &other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    tn += other.tn;
    return *this;
  }
  bool operator==(const ConfusionCounts &) const = default;
};

// A zero denominator yields 0 with the matching degenerate flag set.
struct Metrics {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  bool precision_degenerate = false;
  bool recall_degenerate = false;
  bool f1_degenerate = false;
};

Metrics ComputeMetrics(const ConfusionCounts &counts);

// A prediction is a true positive when it covers at least half of a gold
// span not yet credited; the gold span with the largest overlap is taken,
// leftmost on ties. Predictions are visited in order of position.
ConfusionCounts EvalTokens(const std::vector<Span> &gold,
                           const std::vector<Span> &predicted);

// Same, after checking every span against the document length. Throws
// Error naming the document and the offending span.
ConfusionCounts EvalTokens(std::string_view doc_id, size_t doc_length,
                           const std::vector<Span> &gold,
                           const std::vector<Span> &predicted);

// Binary confusion over paired (gold, predicted) document flags.
ConfusionCounts EvalDocuments(
    const std::vector<std::pair<bool, bool>> &gold_and_predicted);

// Compares normalized entity values: numbers and directions for survey
// classes (a missing direction matches either), normalized names otherwise.
bool EntityValuesEqual(EntityClass cls, std::string_view a, std::string_view b);

using ClassCounts = std::map<EntityClass, ConfusionCounts>;

// Matches need the same class, overlap of at least half the gold span and
// equal values. Each gold entity is credited at most once.
ClassCounts EvalEntities(const std::vector<GoldEntity> &gold,
                         const std::vector<GoldEntity> &predicted);

struct GeorefTally {
  size_t hits = 0;
  size_t attempts = 0;
  double accuracy() const {
    return attempts == 0 ? 0.0 : static_cast<double>(hits) / attempts;
  }
};

struct GeorefEval {
  GeorefTally township;  // 6x6 sq-mi
  GeorefTally section;   // 1x1 sq-mi
  size_t deeds_with_parcels = 0;
  size_t unresolved = 0;
  size_t degenerate_parcels = 0;
};

// A deed scores a hit at a resolution when its parcels are contained in or
// partially overlap the resolved boundary. Deeds without a boundary at a
// resolution stay out of that resolution's denominator.
void EvalGeoref(const MultiPolygon &parcels, const GeorefResult &result,
                GeorefEval &eval);

// Per-document output of one system under evaluation.
struct DocumentPrediction {
  std::vector<Span> term_spans;
  bool doc_flag = false;
  std::vector<GoldEntity> entities;
  std::optional<GeorefResult> georef;
  bool has_subdivision = false;
};

struct SystemPredictions {
  std::string name;
  bool has_detection = false;
  bool has_entities = false;
  bool has_georef = false;
  std::map<std::string, DocumentPrediction> documents;
};

struct SystemReport {
  std::string name;
  bool has_detection = false;
  ConfusionCounts token;
  ConfusionCounts document;
  bool has_entities = false;
  ClassCounts entities;
  bool has_georef = false;
  GeorefEval georef;
  size_t subdivision_deeds = 0;
  size_t deeds = 0;
  // Predicted documents absent from the gold set.
  std::vector<std::string> orphans;
  // Gold documents without a prediction record; scored as empty.
  std::vector<std::string> missing;

  double subdivision_coverage() const {
    return deeds == 0 ? 0.0 : static_cast<double>(subdivision_deeds) / deeds;
  }
};

// Scores one system against the gold set. Gold documents found in `docs`
// have their spans bounds-checked; gold ids absent from `docs` are listed
// in `unknown_gold` when given.
SystemReport EvaluateSystem(const std::vector<Document> &docs,
                            const std::vector<GoldAnnotation> &gold,
                            const SystemPredictions &predictions,
                            std::vector<std::string> *unknown_gold = nullptr);

struct EvalReport {
  std::vector<SystemReport> systems;
  std::vector<std::string> notes;
};

// Plain-text tables: detection in per-token / per-document recall and
// precision columns, entity P/R/F1 per class, georeferencing accuracy per
// resolution. Percentages carry two decimals.
std::string RenderText(const EvalReport &report);
Json RenderJson(const EvalReport &report);

// "91.00" for 0.91.
std::string FormatPercent(double fraction);

}  // namespace deedscan

#endif  // DEEDSCAN_EVALUATOR_H_
