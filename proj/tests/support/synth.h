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

// Synthetic fixtures for tests: a two-state PLSS grid, deeds that describe
// parcels on it, planted-term corpora, and random convex polygons.

#ifndef DEEDSCAN_TESTS_SUPPORT_SYNTH_H_
#define DEEDSCAN_TESTS_SUPPORT_SYNTH_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "deedscan/corpus.h"
#include "deedscan/detector.h"
#include "deedscan/evaluator.h"
#include "deedscan/geometry.h"
#include "deedscan/jsonl.h"
#include "deedscan/plss.h"

namespace deedscan::synth {

using Rng = std::mt19937_64;

// Directory holding the shipped lexicon, rules and gazetteer.
std::filesystem::path DataDir();

// ---- PLSS grid -----------------------------------------------------------

// Row (0 = north) and column (0 = west) of a section inside its township,
// following the serpentine numbering: 1 in the north-east corner, 6 in the
// north-west, 7 below 6, and so on to 36 in the south-east.
std::pair<int, int> SectionCell(int section);

struct GridTownship {
  std::string state;
  int township;
  char township_dir;
  int range;
  char range_dir;
  double west;
  double south;

  PlssKey Key(std::optional<int> section = std::nullopt) const {
    return {state, township, township_dir, range, range_dir, section};
  }
};

// Minnesota T1N R1W and R2W, Wisconsin T1N R1E and R2E. Township and range
// numbers collide across the states; only the range direction differs.
const std::vector<GridTownship> &GridTownships();

Polygon SectionSquare(const GridTownship &t, int section);
Polygon TownshipSquare(const GridTownship &t);

// The two states use different attribute schemas. The Minnesota dataset
// carries township-level features; the Wisconsin one has sections only.
Json MinnesotaDataset();
Json MinnesotaBindings();
Json WisconsinDataset();
Json WisconsinBindings();

void BuildGridIndex(PlssIndex &index);

// ---- Text assembly -------------------------------------------------------

// Appends pieces and reports their code-point spans.
class TextBuilder {
 public:
  Span Append(std::string_view piece);
  // Appends a space unless the text is empty or already ends in one.
  void Space();
  const std::string &text() const { return text_; }
  size_t length() const { return length_; }

 private:
  std::string text_;
  size_t length_ = 0;
};

// Words with no near neighbour in the shipped lexicon.
const std::vector<std::string> &FillerWords();
void AppendFiller(TextBuilder &b, Rng &rng, size_t words);

// ---- Fixture deeds -------------------------------------------------------

struct FixtureDeed {
  std::string id;
  std::string text;
  GoldAnnotation gold;
  PlssKey truth;  // with section
};

// Deeds over the grid, each describing one section in one of several
// surface styles, about a third with a planted restrictive clause. Each
// gold parcel is a small square strictly inside the true section. With
// target_bytes > 0 the text is padded with filler to roughly that size.
std::vector<FixtureDeed> MakeFixtureCorpus(size_t n, uint64_t seed,
                                           size_t target_bytes = 0);

// Writes corpus.jsonl, gold.jsonl, the two PLSS datasets with bindings,
// copies of the shipped data files and a config.json referencing them.
void WriteFixture(const std::filesystem::path &dir,
                  const std::vector<FixtureDeed> &deeds);

Json GoldToJson(const GoldAnnotation &gold);

// ---- Planted-term corpora -------------------------------------------------

struct PlantedDoc {
  std::string id;
  std::string text;
  std::vector<Span> spans;  // planted lexicon phrases
};

// Lexicon of pronounceable nonsense phrases whose words are at least five
// letters long and far from each other and from the filler vocabulary.
Lexicon SyntheticLexicon(size_t entries, uint64_t seed);

// One random letter insertion, deletion or substitution; never a no-op.
std::string RandomEdit(const std::string &word, Rng &rng);

// Filler documents, `planted_fraction` of them with one to three lexicon
// phrases in random case. With `noisy`, each planted phrase receives one
// edit in one of its words.
std::vector<PlantedDoc> MakePlantedCorpus(const Lexicon &lexicon, size_t n,
                                          double planted_fraction, bool noisy,
                                          uint64_t seed);

// Documents using "race" in the sense of humankind, with no restrictive use.
std::vector<PlantedDoc> HumanRaceDistractors(size_t n, uint64_t seed);
// Documents with restrictive clauses, including ones that use "race".
std::vector<PlantedDoc> RestrictiveClauses(size_t n, uint64_t seed);

// ---- Convex polygons -------------------------------------------------------

// Convex polygon: points at sorted random angles on an ellipse.
Polygon RandomConvexPolygon(Rng &rng, Point center, double radius);

// Classifies by sampling `samples` points uniformly in a's bounding box:
// none of a's points in b → disjoint, all → contained, otherwise partial.
Overlap MonteCarloOverlap(const Polygon &a, const Polygon &b, size_t samples,
                          Rng &rng);

// Smallest distance from a vertex of either polygon to the other's boundary.
double BoundaryGap(const Polygon &a, const Polygon &b);

// ---- Metric fixture -------------------------------------------------------

// Ten 100-character documents with a known mix of token and document
// outcomes. Hand counts: token tp 4, fp 4, fn 4; document tp 5, fp 2,
// fn 1, tn 2.
struct MetricFixture {
  std::vector<Document> docs;
  std::vector<GoldAnnotation> gold;
  SystemPredictions predictions;
};

MetricFixture TenDocFixture();

// ---- Oracles ------------------------------------------------------------

// Edit distance by the textbook recursion, memoized per call.
size_t RecursiveLevenshtein(std::u32string_view a, std::u32string_view b);

// All strings over `alphabet` of length 0..max_length, shortest first.
std::vector<std::u32string> AllStrings(std::u32string_view alphabet,
                                       size_t max_length);

}  // namespace deedscan::synth

#endif  // DEEDSCAN_TESTS_SUPPORT_SYNTH_H_
