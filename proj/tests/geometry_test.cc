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

#include <gtest/gtest.h>

#include "deedscan/geometry.h"
#include "deedscan/text.h"
#include "synth.h"

namespace deedscan {
namespace {

MultiPolygon Rect(double x0, double y0, double x1, double y1) {
  return {RectanglePolygon(x0, y0, x1, y1)};
}

MultiPolygon Shape(const Polygon &p) { return {p}; }

TEST(RingTest, Validation) {
  Ring open = {{0, 0}, {1, 0}, {1, 1}};
  EXPECT_THROW(ValidateRing(open), Error);
  Ring two = {{0, 0}, {1, 0}, {0, 0}, {0, 0}};
  EXPECT_THROW(ValidateRing(two), Error);
  EXPECT_NO_THROW(ValidateRing(RectanglePolygon(0, 0, 1, 1).exterior));
}

TEST(RingTest, AreaAndBox) {
  Polygon sq = RectanglePolygon(0, 0, 2, 3);
  EXPECT_DOUBLE_EQ(std::abs(SignedArea(sq.exterior)), 6.0);
  Ring reversed(sq.exterior.rbegin(), sq.exterior.rend());
  EXPECT_DOUBLE_EQ(SignedArea(reversed), -SignedArea(sq.exterior));
  BBox box = BoundingBox(Rect(0, 0, 2, 3));
  EXPECT_EQ(box.min_lon, 0);
  EXPECT_EQ(box.max_lat, 3);
}

TEST(PointInPolygonTest, InteriorEdgeAndHole) {
  Polygon p = RectanglePolygon(0, 0, 10, 10);
  EXPECT_TRUE(PointInPolygon({5, 5}, p));
  EXPECT_FALSE(PointInPolygon({11, 5}, p));
  EXPECT_TRUE(PointInPolygon({0, 5}, p));
  EXPECT_TRUE(PointInPolygon({10, 10}, p));
  EXPECT_TRUE(PointInPolygon({10 + 5e-10, 5}, p));
  EXPECT_FALSE(PointInPolygon({10 + 1e-6, 5}, p));
  p.holes.push_back(RectanglePolygon(4, 4, 6, 6).exterior);
  EXPECT_FALSE(PointInPolygon({5, 5}, p));
  EXPECT_TRUE(PointInPolygon({4, 5}, p));
  EXPECT_TRUE(PointInPolygon({2, 2}, p));
  EXPECT_TRUE(PointInShape({25, 5}, {RectanglePolygon(0, 0, 1, 1), RectanglePolygon(20, 0, 30, 10)}));
}

TEST(OverlapTest, Examples) {
  EXPECT_EQ(ComputeOverlap(Rect(0, 0, 1, 1), Rect(0, 0, 1, 1)), Overlap::kContained);
  EXPECT_EQ(ComputeOverlap(Rect(0, 0, 1, 1), Rect(0.5, 0, 1.5, 1)), Overlap::kPartial);
  EXPECT_EQ(ComputeOverlap(Rect(0, 0, 1, 1), Rect(11, 0, 12, 1)), Overlap::kDisjoint);
}

TEST(OverlapTest, NestingAndCrossing) {
  // Small inside big, and the reverse.
  EXPECT_EQ(ComputeOverlap(Rect(2, 2, 3, 3), Rect(0, 0, 10, 10)), Overlap::kContained);
  EXPECT_EQ(ComputeOverlap(Rect(0, 0, 10, 10), Rect(2, 2, 3, 3)), Overlap::kPartial);
  // A plus sign: no vertex of either lies inside the other.
  EXPECT_EQ(ComputeOverlap(Rect(0, 4, 10, 6), Rect(4, 0, 6, 10)), Overlap::kPartial);
  // Touching along an edge counts as overlap.
  EXPECT_NE(ComputeOverlap(Rect(0, 0, 1, 1), Rect(1, 0, 2, 1)), Overlap::kDisjoint);
  // Inside the hole of b.
  Polygon donut = RectanglePolygon(0, 0, 10, 10);
  donut.holes.push_back(RectanglePolygon(3, 3, 7, 7).exterior);
  EXPECT_EQ(ComputeOverlap(Rect(4, 4, 6, 6), {donut}), Overlap::kDisjoint);
  EXPECT_EQ(ComputeOverlap(Rect(2, 4, 6, 6), {donut}), Overlap::kPartial);
}

TEST(OverlapTest, MultiPolygonIsUnion) {
  MultiPolygon two = {RectanglePolygon(0, 0, 1, 1), RectanglePolygon(1, 0, 2, 1)};
  EXPECT_EQ(ComputeOverlap(Rect(0.2, 0.2, 0.8, 0.8), two), Overlap::kContained);
  EXPECT_EQ(ComputeOverlap(Rect(5, 5, 6, 6), two), Overlap::kDisjoint);
  EXPECT_EQ(ComputeOverlap(two, Rect(-1, -1, 3, 3)), Overlap::kContained);
}

TEST(OverlapTest, ZeroAreaIsAnError) {
  Polygon flat;
  flat.exterior = {{0, 0}, {1, 1}, {2, 2}, {0, 0}};
  EXPECT_THROW(ComputeOverlap({flat}, Rect(0, 0, 1, 1)), Error);
  EXPECT_THROW(ComputeOverlap(Rect(0, 0, 1, 1), {flat}), Error);
  EXPECT_THROW(ComputeOverlap({}, Rect(0, 0, 1, 1)), Error);
}

TEST(GeoJsonTest, RoundTrip) {
  MultiPolygon shape = {RectanglePolygon(0, 0, 1, 1), RectanglePolygon(2, 2, 3, 3)};
  shape[1].holes.push_back(RectanglePolygon(2.2, 2.2, 2.8, 2.8).exterior);
  Json j = ToGeoJson(shape);
  EXPECT_EQ(j["type"], "MultiPolygon");
  MultiPolygon back = ParseGeoJsonGeometry(j);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].exterior, shape[0].exterior);
  EXPECT_EQ(back[1].holes.at(0), shape[1].holes[0]);

  Json poly = Json::parse(R"({"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1],[0,0]]]})");
  EXPECT_EQ(ParseGeoJsonGeometry(poly).size(), 1u);
}

TEST(GeoJsonTest, Errors) {
  for (const char *bad : {
           R"("Polygon")",
           R"({"type":"Point","coordinates":[0,0]})",
           R"({"type":"Polygon","coordinates":[]})",
           R"({"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1]]]})",
           R"({"type":"Polygon","coordinates":[[[0,0],[1,0],["x",1],[0,0]]]})",
           R"({"type":"Polygon","coordinates":[[[0,0],[1,0],[0,0]]]})",
           R"({"type":"MultiPolygon","coordinates":[]})",
       }) {
    EXPECT_THROW(ParseGeoJsonGeometry(Json::parse(bad)), Error) << bad;
  }
}

TEST(OverlapPropertyTest, AgreesWithSampling) {
  synth::Rng rng(51);
  std::uniform_real_distribution<double> offset(-2.0, 2.0);
  size_t compared = 0, agreed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Polygon a = synth::RandomConvexPolygon(rng, {0, 0}, 1.0);
    Polygon b = synth::RandomConvexPolygon(rng, {offset(rng), offset(rng)}, 1.5);
    if (synth::BoundaryGap(a, b) < 0.01) continue;
    ++compared;
    agreed += ComputeOverlap(Shape(a), Shape(b)) == synth::MonteCarloOverlap(a, b, 4000, rng);
  }
  ASSERT_GT(compared, 200u);
  EXPECT_GE(static_cast<double>(agreed), 0.99 * static_cast<double>(compared));
}

TEST(OverlapPropertyTest, SymmetryRules) {
  synth::Rng rng(52);
  std::uniform_real_distribution<double> offset(-2.5, 2.5), radius(0.2, 2.0);
  for (int trial = 0; trial < 2000; ++trial) {
    MultiPolygon a = Shape(synth::RandomConvexPolygon(rng, {0, 0}, radius(rng)));
    MultiPolygon b =
        Shape(synth::RandomConvexPolygon(rng, {offset(rng), offset(rng)}, radius(rng)));
    Overlap ab = ComputeOverlap(a, b), ba = ComputeOverlap(b, a);
    EXPECT_EQ(ab == Overlap::kDisjoint, ba == Overlap::kDisjoint);
    if (ab == Overlap::kContained) {
      EXPECT_NE(ba, Overlap::kDisjoint);
    }
    EXPECT_EQ(ComputeOverlap(a, a), Overlap::kContained);
  }
}

TEST(DistanceTest, ToBoundary) {
  MultiPolygon sq = Rect(0, 0, 10, 10);
  EXPECT_DOUBLE_EQ(DistanceToBoundary({5, 5}, sq), 5.0);
  EXPECT_DOUBLE_EQ(DistanceToBoundary({13, 14}, sq), 5.0);
  EXPECT_DOUBLE_EQ(DistanceToBoundary({0, 3}, sq), 0.0);
}

}  // namespace
}  // namespace deedscan
