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

#ifndef DEEDSCAN_GEOMETRY_H_
#define DEEDSCAN_GEOMETRY_H_

#include <vector>

#include "deedscan/jsonl.h"

namespace deedscan {

// Planar geometry over lon/lat pairs as given. No reprojection is done.

struct Point {
  double lon = 0;
  double lat = 0;
  bool operator==(const Point &) const = default;
};

// A closed ring: the first vertex is repeated as the last.
using Ring = std::vector<Point>;

struct Polygon {
  Ring exterior;
  std::vector<Ring> holes;
};

// Polygons of a multi-part feature are treated as a union.
using MultiPolygon = std::vector<Polygon>;

struct BBox {
  double min_lon = 0;
  double min_lat = 0;
  double max_lon = 0;
  double max_lat = 0;

  bool Contains(const BBox &other, double epsilon = 0) const {
    return other.min_lon >= min_lon - epsilon &&
           other.min_lat >= min_lat - epsilon &&
           other.max_lon <= max_lon + epsilon &&
           other.max_lat <= max_lat + epsilon;
  }
};

enum class Overlap { kContained, kPartial, kDisjoint };

const char *OverlapName(Overlap overlap);

// Tolerance, in coordinate units, within which a point counts as lying on
// an edge. On-edge points are inside.
inline constexpr double kEdgeEpsilon = 1e-9;

// Throws Error unless the ring is closed with at least 3 distinct vertices.
void ValidateRing(const Ring &ring);

double SignedArea(const Ring &ring);
BBox BoundingBox(const MultiPolygon &shape);

// Even-odd ray casting over all rings; points within kEdgeEpsilon of any
// edge are inside.
bool PointInPolygon(Point p, const Polygon &polygon);
bool PointInShape(Point p, const MultiPolygon &shape);

// Distance from p to the nearest edge of any ring of shape.
double DistanceToBoundary(Point p, const MultiPolygon &shape);

// Classifies shape a against shape b:
//   contained - every vertex of a is inside b and no edges cross;
//   partial   - some edges cross, or a's vertices fall both inside and
//               outside b, or b reaches into a;
//   disjoint  - otherwise.
// Throws Error when either shape has a zero-area part.
Overlap ComputeOverlap(const MultiPolygon &a, const MultiPolygon &b);

// GeoJSON Polygon / MultiPolygon geometry objects. Parsing validates rings.
MultiPolygon ParseGeoJsonGeometry(const Json &geometry);
Json ToGeoJson(const MultiPolygon &shape);

// Axis-aligned rectangle as a single closed ring polygon.
Polygon RectanglePolygon(double min_lon, double min_lat, double max_lon,
                         double max_lat);

}  // namespace deedscan

#endif  // DEEDSCAN_GEOMETRY_H_
