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

#include "deedscan/evaluator.h"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "deedscan/subdiv.h"
#include "deedscan/text.h"

namespace deedscan {

namespace {

std::string Pad(std::string_view s, size_t width, bool right = false) {
  std::string out(s);
  if (out.size() >= width) return out;
  std::string fill(width - out.size(), ' ');
  return right ? fill + out : out + fill;
}

std::string WithCommas(size_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

std::string Cell(double value, bool degenerate) {
  return FormatPercent(value) + (degenerate ? "*" : " ");
}

// Leading integer and an optional trailing direction letter.
std::pair<std::optional<int>, char> SurveyValue(std::string_view value) {
  std::string norm = NormalizeWord(value);
  size_t i = 0;
  int n = 0;
  while (i < norm.size() && norm[i] >= '0' && norm[i] <= '9') {
    n = n * 10 + (norm[i] - '0');
    if (n > 1000000) return {std::nullopt, 0};
    ++i;
  }
  if (i == 0) return {std::nullopt, 0};
  std::string rest = norm.substr(i);
  char dir = 0;
  if (rest == "n" || rest == "north") dir = 'N';
  else if (rest == "s" || rest == "south") dir = 'S';
  else if (rest == "e" || rest == "east") dir = 'E';
  else if (rest == "w" || rest == "west") dir = 'W';
  else if (!rest.empty()) return {std::nullopt, 0};
  return {n, dir};
}

Json CountsJson(const ConfusionCounts &c, bool with_tn) {
  Metrics m = ComputeMetrics(c);
  Json out{{"tp", c.tp},
           {"fp", c.fp},
           {"fn", c.fn},
           {"precision", m.precision},
           {"recall", m.recall},
           {"f1", m.f1},
           {"precision_degenerate", m.precision_degenerate},
           {"recall_degenerate", m.recall_degenerate},
           {"f1_degenerate", m.f1_degenerate}};
  if (with_tn) out["tn"] = c.tn;
  return out;
}

Json TallyJson(const GeorefTally &t) {
  return Json{{"hits", t.hits}, {"attempts", t.attempts}, {"accuracy", t.accuracy()}};
}

}  // namespace

Metrics ComputeMetrics(const ConfusionCounts &c) {
  Metrics m;
  if (c.tp + c.fp == 0) {
    m.precision_degenerate = true;
  } else {
    m.precision = static_cast<double>(c.tp) / (c.tp + c.fp);
  }
  if (c.tp + c.fn == 0) {
    m.recall_degenerate = true;
  } else {
    m.recall = static_cast<double>(c.tp) / (c.tp + c.fn);
  }
  if (m.precision + m.recall == 0) {
    m.f1_degenerate = true;
  } else {
    m.f1 = 2 * m.precision * m.recall / (m.precision + m.recall);
  }
  return m;
}

ConfusionCounts EvalTokens(const std::vector<Span> &gold,
                           const std::vector<Span> &predicted) {
  std::vector<Span> preds = predicted;
  std::sort(preds.begin(), preds.end());
  std::vector<bool> credited(gold.size(), false);
  ConfusionCounts counts;
  for (const Span &p : preds) {
    std::optional<size_t> best;
    size_t best_overlap = 0;
    for (size_t g = 0; g < gold.size(); ++g) {
      if (credited[g]) continue;
      size_t overlap = OverlapLength(p, gold[g]);
      if (overlap == 0 || 2 * overlap < gold[g].length()) continue;
      if (!best || overlap > best_overlap ||
          (overlap == best_overlap && gold[g].start < gold[*best].start)) {
        best = g;
        best_overlap = overlap;
      }
    }
    if (best) {
      credited[*best] = true;
      ++counts.tp;
    } else {
      ++counts.fp;
    }
  }
  counts.fn = std::count(credited.begin(), credited.end(), false);
  return counts;
}

ConfusionCounts EvalTokens(std::string_view doc_id, size_t doc_length,
                           const std::vector<Span> &gold,
                           const std::vector<Span> &predicted) {
  for (const auto *spans : {&gold, &predicted}) {
    for (const Span &s : *spans) {
      if (s.start >= s.end || s.end > doc_length) {
        throw Error("document '" + std::string(doc_id) + "': span [" +
                    std::to_string(s.start) + "," + std::to_string(s.end) +
                    ") is outside the text (length " +
                    std::to_string(doc_length) + ")");
      }
    }
  }
  return EvalTokens(gold, predicted);
}

ConfusionCounts EvalDocuments(
    const std::vector<std::pair<bool, bool>> &gold_and_predicted) {
  ConfusionCounts counts;
  for (const auto &[gold, predicted] : gold_and_predicted) {
    if (gold && predicted) ++counts.tp;
    else if (!gold && predicted) ++counts.fp;
    else if (gold && !predicted) ++counts.fn;
    else ++counts.tn;
  }
  return counts;
}

bool EntityValuesEqual(EntityClass cls, std::string_view a, std::string_view b) {
  if (IsPlssClass(cls)) {
    auto [na, da] = SurveyValue(a);
    auto [nb, db] = SurveyValue(b);
    if (!na || !nb || *na != *nb) return false;
    if (cls == EntityClass::kSection) return true;
    return da == 0 || db == 0 || da == db;
  }
  if (cls == EntityClass::kSubdivision) {
    return NormalizeSubdivision(a) == NormalizeSubdivision(b);
  }
  return NormalizedWords(a) == NormalizedWords(b);
}

ClassCounts EvalEntities(const std::vector<GoldEntity> &gold,
                         const std::vector<GoldEntity> &predicted) {
  ClassCounts counts;
  std::vector<bool> credited(gold.size(), false);
  std::vector<const GoldEntity *> preds;
  for (const GoldEntity &p : predicted) preds.push_back(&p);
  std::stable_sort(preds.begin(), preds.end(),
                   [](const GoldEntity *a, const GoldEntity *b) {
                     return a->span < b->span;
                   });
  for (const GoldEntity *p : preds) {
    std::optional<size_t> best;
    size_t best_overlap = 0;
    for (size_t g = 0; g < gold.size(); ++g) {
      if (credited[g] || gold[g].cls != p->cls) continue;
      size_t overlap = OverlapLength(p->span, gold[g].span);
      if (overlap == 0 || 2 * overlap < gold[g].span.length()) continue;
      if (!EntityValuesEqual(p->cls, p->value, gold[g].value)) continue;
      if (!best || overlap > best_overlap) {
        best = g;
        best_overlap = overlap;
      }
    }
    if (best) {
      credited[*best] = true;
      ++counts[p->cls].tp;
    } else {
      ++counts[p->cls].fp;
    }
  }
  for (size_t g = 0; g < gold.size(); ++g) {
    if (!credited[g]) ++counts[gold[g].cls].fn;
  }
  return counts;
}

void EvalGeoref(const MultiPolygon &parcels, const GeorefResult &result,
                GeorefEval &eval) {
  if (parcels.empty()) return;
  if (!result.resolved()) {
    ++eval.deeds_with_parcels;
    ++eval.unresolved;
    return;
  }
  // Index boundaries come from validated rings, so a throw here means the
  // parcel itself is degenerate.
  std::optional<bool> township_hit;
  std::optional<bool> section_hit;
  try {
    if (result.township != nullptr) {
      township_hit = ComputeOverlap(parcels, result.township->shape) !=
                     Overlap::kDisjoint;
    }
    if (result.boundary->resolution == Resolution::kSection) {
      section_hit = ComputeOverlap(parcels, result.boundary->shape) !=
                    Overlap::kDisjoint;
    }
  } catch (const Error &) {
    ++eval.degenerate_parcels;
    return;
  }
  ++eval.deeds_with_parcels;
  if (township_hit) {
    ++eval.township.attempts;
    eval.township.hits += *township_hit;
  }
  if (section_hit) {
    ++eval.section.attempts;
    eval.section.hits += *section_hit;
  }
}

SystemReport EvaluateSystem(const std::vector<Document> &docs,
                            const std::vector<GoldAnnotation> &gold,
                            const SystemPredictions &predictions,
                            std::vector<std::string> *unknown_gold) {
  SystemReport report;
  report.name = predictions.name;
  report.has_detection = predictions.has_detection;
  report.has_entities = predictions.has_entities;
  report.has_georef = predictions.has_georef;

  std::unordered_map<std::string, size_t> lengths;
  for (const Document &doc : docs) lengths[doc.id()] = doc.length();

  std::unordered_set<std::string> gold_ids;
  std::vector<std::pair<bool, bool>> flags;
  const DocumentPrediction empty;
  for (const GoldAnnotation &ann : gold) {
    gold_ids.insert(ann.doc_id);
    auto it = predictions.documents.find(ann.doc_id);
    const DocumentPrediction &pred =
        it == predictions.documents.end() ? empty : it->second;
    if (it == predictions.documents.end()) report.missing.push_back(ann.doc_id);
    auto len = lengths.find(ann.doc_id);
    if (len == lengths.end() && unknown_gold != nullptr) {
      unknown_gold->push_back(ann.doc_id);
    }
    ++report.deeds;

    if (predictions.has_detection) {
      report.token += len != lengths.end()
                          ? EvalTokens(ann.doc_id, len->second, ann.term_spans,
                                       pred.term_spans)
                          : EvalTokens(ann.term_spans, pred.term_spans);
      flags.emplace_back(ann.doc_flag, pred.doc_flag);
    }
    if (predictions.has_entities) {
      for (const auto &[cls, counts] : EvalEntities(ann.entities, pred.entities)) {
        report.entities[cls] += counts;
      }
    }
    if (predictions.has_georef) {
      GeorefResult unresolved;
      EvalGeoref(ann.parcels, pred.georef ? *pred.georef : unresolved,
                 report.georef);
      if (pred.has_subdivision) ++report.subdivision_deeds;
    }
  }
  report.document = EvalDocuments(flags);
  for (const auto &[id, pred] : predictions.documents) {
    if (!gold_ids.count(id)) report.orphans.push_back(id);
  }
  std::sort(report.orphans.begin(), report.orphans.end());
  return report;
}

std::string FormatPercent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * fraction);
  return buf;
}

std::string RenderText(const EvalReport &report) {
  std::ostringstream out;
  bool any_degenerate = false;

  bool any_detection = std::any_of(report.systems.begin(), report.systems.end(),
                                   [](const SystemReport &s) { return s.has_detection; });
  if (any_detection) {
    out << "Restrictive-term detection\n";
    out << Pad("", 16) << Pad("Per Token", 30) << "Per Document\n";
    out << Pad("Method", 16) << Pad("Recall (%)", 14, true)
        << Pad("Precision (%)", 16, true) << Pad("Recall (%)", 14, true)
        << Pad("Precision (%)", 16, true) << "\n";
    for (const SystemReport &s : report.systems) {
      if (!s.has_detection) continue;
      Metrics token = ComputeMetrics(s.token);
      Metrics doc = ComputeMetrics(s.document);
      any_degenerate |= token.recall_degenerate || token.precision_degenerate ||
                        doc.recall_degenerate || doc.precision_degenerate;
      out << Pad(s.name, 16)
          << Pad(Cell(token.recall, token.recall_degenerate), 14, true)
          << Pad(Cell(token.precision, token.precision_degenerate), 16, true)
          << Pad(Cell(doc.recall, doc.recall_degenerate), 14, true)
          << Pad(Cell(doc.precision, doc.precision_degenerate), 16, true) << "\n";
    }
    for (const SystemReport &s : report.systems) {
      if (!s.has_detection) continue;
      out << "  " << s.name << ": token tp=" << s.token.tp << " fp=" << s.token.fp
          << " fn=" << s.token.fn << "; document tp=" << s.document.tp
          << " fp=" << s.document.fp << " fn=" << s.document.fn
          << " tn=" << s.document.tn << "\n";
    }
    out << "\n";
  }

  for (const SystemReport &s : report.systems) {
    if (!s.has_entities) continue;
    out << "Entity recognition (" << s.name << ")\n";
    out << Pad("Entity", 14) << Pad("Precision (%)", 16, true)
        << Pad("Recall (%)", 14, true) << Pad("F1-score (%)", 16, true)
        << Pad("tp", 8, true) << Pad("fp", 8, true) << Pad("fn", 8, true) << "\n";
    for (EntityClass cls : kAllEntityClasses) {
      auto it = s.entities.find(cls);
      if (it == s.entities.end()) continue;
      Metrics m = ComputeMetrics(it->second);
      any_degenerate |= m.precision_degenerate || m.recall_degenerate || m.f1_degenerate;
      out << Pad(EntityClassName(cls), 14)
          << Pad(Cell(m.precision, m.precision_degenerate), 16, true)
          << Pad(Cell(m.recall, m.recall_degenerate), 14, true)
          << Pad(Cell(m.f1, m.f1_degenerate), 16, true)
          << Pad(std::to_string(it->second.tp), 8, true)
          << Pad(std::to_string(it->second.fp), 8, true)
          << Pad(std::to_string(it->second.fn), 8, true) << "\n";
    }
    out << "\n";
  }

  for (const SystemReport &s : report.systems) {
    if (!s.has_georef) continue;
    out << "Georeferencing (" << s.name << ")\n";
    out << Pad("Resolution", 12) << Pad("Entities", 26) << "Accuracy\n";
    auto row = [&](const char *res, const char *entities, const GeorefTally &t) {
      out << Pad(res, 12) << Pad(entities, 26) << FormatPercent(t.accuracy())
          << (t.attempts == 0 ? "*" : "") << "% (" << WithCommas(t.attempts)
          << " deeds)\n";
      any_degenerate |= t.attempts == 0;
    };
    row("6x6 sq-mi", "Township, Range", s.georef.township);
    row("1x1 sq-mi", "Township, Range, Section", s.georef.section);
    out << "  deeds with parcels: " << s.georef.deeds_with_parcels
        << "; unresolved: " << s.georef.unresolved;
    if (s.georef.degenerate_parcels > 0) {
      out << "; degenerate parcels skipped: " << s.georef.degenerate_parcels;
    }
    out << "\n";
    out << "  subdivision-level coverage: " << FormatPercent(s.subdivision_coverage())
        << "% (" << WithCommas(s.subdivision_deeds) << " of "
        << WithCommas(s.deeds) << " deeds)\n\n";
  }

  if (any_degenerate) {
    out << "* zero denominator; reported as 0.00\n";
  }
  for (const SystemReport &s : report.systems) {
    if (!s.orphans.empty()) {
      out << "note: " << s.name << ": " << s.orphans.size()
          << " predicted document(s) not in gold\n";
    }
    if (!s.missing.empty()) {
      out << "note: " << s.name << ": " << s.missing.size()
          << " gold document(s) without predictions, scored as empty\n";
    }
  }
  for (const std::string &note : report.notes) out << "note: " << note << "\n";

  // Cells reserve a column for the degenerate marker; drop it at line ends.
  std::string text;
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    text += line + "\n";
  }
  return text;
}

Json RenderJson(const EvalReport &report) {
  Json systems = Json::array();
  for (const SystemReport &s : report.systems) {
    Json sys;
    sys["name"] = s.name;
    sys["deeds"] = s.deeds;
    if (s.has_detection) {
      sys["token"] = CountsJson(s.token, false);
      sys["document"] = CountsJson(s.document, true);
    }
    if (s.has_entities) {
      Json entities = Json::object();
      for (const auto &[cls, counts] : s.entities) {
        entities[std::string(EntityClassName(cls))] = CountsJson(counts, false);
      }
      sys["entities"] = std::move(entities);
    }
    if (s.has_georef) {
      sys["georef"] = {{"6x6", TallyJson(s.georef.township)},
                       {"1x1", TallyJson(s.georef.section)},
                       {"deeds_with_parcels", s.georef.deeds_with_parcels},
                       {"unresolved", s.georef.unresolved},
                       {"degenerate_parcels", s.georef.degenerate_parcels}};
      sys["subdivision_coverage"] = {{"deeds", s.subdivision_deeds},
                                     {"fraction", s.subdivision_coverage()}};
    }
    sys["orphans"] = s.orphans;
    sys["missing"] = s.missing;
    systems.push_back(std::move(sys));
  }
  return Json{{"systems", systems}, {"notes", report.notes}};
}

}  // namespace deedscan
