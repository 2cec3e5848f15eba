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

#include "deedscan/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "deedscan/text.h"

namespace deedscan {

namespace {

double Cross(Point o, Point a, Point b) {
  return (a.lon - o.lon) * (b.lat - o.lat) - (a.lat - o.lat) * (b.lon - o.lon);
}

double DistanceToSegment(Point p, Point a, Point b) {
  double dx = b.lon - a.lon;
  double dy = b.lat - a.lat;
  double len2 = dx * dx + dy * dy;
  double t = 0;
  if (len2 > 0) {
    t = ((p.lon - a.lon) * dx + (p.lat - a.lat) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  double x = a.lon + t * dx - p.lon;
  double y = a.lat + t * dy - p.lat;
  return std::sqrt(x * x + y * y);
}

// Sign of the orientation of c relative to the line through a and b, with
// points closer than kEdgeEpsilon to the line counted as collinear.
int Orientation(Point a, Point b, Point c) {
  double cross = Cross(a, b, c);
  double len = std::hypot(b.lon - a.lon, b.lat - a.lat);
  if (std::abs(cross) <= kEdgeEpsilon * len) return 0;
  return cross > 0 ? 1 : -1;
}

bool ProperlyCross(Point p1, Point p2, Point q1, Point q2) {
  int d1 = Orientation(q1, q2, p1);
  int d2 = Orientation(q1, q2, p2);
  int d3 = Orientation(p1, p2, q1);
  int d4 = Orientation(p1, p2, q2);
  return d1 * d2 < 0 && d3 * d4 < 0;
}

template <typename Fn>
void ForEachRing(const MultiPolygon &shape, Fn fn) {
  for (const Polygon &polygon : shape) {
    fn(polygon.exterior);
    for (const Ring &hole : polygon.holes) fn(hole);
  }
}

bool RingInside(Point p, const Ring &ring) {
  bool inside = false;
  for (size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Point &a = ring[i];
    const Point &b = ring[j];
    if ((a.lat > p.lat) != (b.lat > p.lat)) {
      double x = (b.lon - a.lon) * (p.lat - a.lat) / (b.lat - a.lat) + a.lon;
      if (p.lon < x) inside = !inside;
    }
  }
  return inside;
}

void CheckNotDegenerate(const MultiPolygon &shape) {
  if (shape.empty()) throw Error("degenerate polygon: no rings");
  for (const Polygon &polygon : shape) {
    if (polygon.exterior.size() < 4 ||
        std::abs(SignedArea(polygon.exterior)) <= 1e-18) {
      throw Error("degenerate polygon: zero area");
    }
  }
}

Ring ParseRing(const Json &coords) {
  if (!coords.is_array()) throw Error("ring must be an array of positions");
  Ring ring;
  ring.reserve(coords.size());
  for (const Json &pos : coords) {
    if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() ||
        !pos[1].is_number()) {
      throw Error("invalid position in ring");
    }
    ring.push_back({pos[0].get<double>(), pos[1].get<double>()});
  }
  ValidateRing(ring);
  return ring;
}

Polygon ParsePolygon(const Json &coords) {
  if (!coords.is_array() || coords.empty()) {
    throw Error("polygon must have at least one ring");
  }
  Polygon polygon;
  polygon.exterior = ParseRing(coords[0]);
  for (size_t i = 1; i < coords.size(); ++i) {
    polygon.holes.push_back(ParseRing(coords[i]));
  }
  return polygon;
}

Json RingToJson(const Ring &ring) {
  Json out = Json::array();
  for (const Point &p : ring) out.push_back({p.lon, p.lat});
  return out;
}

}  // namespace

const char *OverlapName(Overlap overlap) {
  switch (overlap) {
    case Overlap::kContained: return "contained";
    case Overlap::kPartial: return "partial";
    case Overlap::kDisjoint: return "disjoint";
  }
  return "";
}

void ValidateRing(const Ring &ring) {
  if (ring.empty() || !(ring.front() == ring.back())) {
    throw Error("ring is not closed");
  }
  size_t distinct = 0;
  for (size_t i = 0; i + 1 < ring.size(); ++i) {
    bool seen = false;
    for (size_t j = 0; j < i; ++j) {
      if (ring[j] == ring[i]) {
        seen = true;
        break;
      }
    }
    if (!seen) ++distinct;
  }
  if (ring.size() < 4 || distinct < 3) {
    throw Error("ring has fewer than 3 distinct vertices");
  }
}

double SignedArea(const Ring &ring) {
  double area = 0;
  for (size_t i = 0; i + 1 < ring.size(); ++i) {
    area += ring[i].lon * ring[i + 1].lat - ring[i + 1].lon * ring[i].lat;
  }
  return area / 2;
}

BBox BoundingBox(const MultiPolygon &shape) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  BBox box{kInf, kInf, -kInf, -kInf};
  for (const Polygon &polygon : shape) {
    for (const Point &p : polygon.exterior) {
      box.min_lon = std::min(box.min_lon, p.lon);
      box.min_lat = std::min(box.min_lat, p.lat);
      box.max_lon = std::max(box.max_lon, p.lon);
      box.max_lat = std::max(box.max_lat, p.lat);
    }
  }
  return box;
}

double DistanceToBoundary(Point p, const MultiPolygon &shape) {
  double best = std::numeric_limits<double>::infinity();
  ForEachRing(shape, [&](const Ring &ring) {
    for (size_t i = 0; i + 1 < ring.size(); ++i) {
      best = std::min(best, DistanceToSegment(p, ring[i], ring[i + 1]));
    }
  });
  return best;
}

bool PointInPolygon(Point p, const Polygon &polygon) {
  MultiPolygon single{polygon};
  if (DistanceToBoundary(p, single) <= kEdgeEpsilon) return true;
  bool inside = RingInside(p, polygon.exterior);
  for (const Ring &hole : polygon.holes) {
    if (RingInside(p, hole)) inside = !inside;
  }
  return inside;
}

bool PointInShape(Point p, const MultiPolygon &shape) {
  for (const Polygon &polygon : shape) {
    if (PointInPolygon(p, polygon)) return true;
  }
  return false;
}

Overlap ComputeOverlap(const MultiPolygon &a, const MultiPolygon &b) {
  CheckNotDegenerate(a);
  CheckNotDegenerate(b);
  BBox box_a = BoundingBox(a);
  BBox box_b = BoundingBox(b);
  if (box_a.max_lon < box_b.min_lon - kEdgeEpsilon ||
      box_b.max_lon < box_a.min_lon - kEdgeEpsilon ||
      box_a.max_lat < box_b.min_lat - kEdgeEpsilon ||
      box_b.max_lat < box_a.min_lat - kEdgeEpsilon) {
    return Overlap::kDisjoint;
  }

  bool crossing = false;
  ForEachRing(a, [&](const Ring &ra) {
    if (crossing) return;
    ForEachRing(b, [&](const Ring &rb) {
      if (crossing) return;
      for (size_t i = 0; i + 1 < ra.size() && !crossing; ++i) {
        for (size_t j = 0; j + 1 < rb.size(); ++j) {
          if (ProperlyCross(ra[i], ra[i + 1], rb[j], rb[j + 1])) {
            crossing = true;
            break;
          }
        }
      }
    });
  });
  if (crossing) return Overlap::kPartial;

  size_t inside = 0;
  size_t total = 0;
  ForEachRing(a, [&](const Ring &ring) {
    for (size_t i = 0; i + 1 < ring.size(); ++i) {
      ++total;
      if (PointInShape(ring[i], b)) ++inside;
    }
  });

  if (inside == total) {
    // A hole of b lying strictly inside a punches through it.
    for (const Polygon &polygon : b) {
      for (const Ring &hole : polygon.holes) {
        for (const Point &p : hole) {
          if (PointInShape(p, a) && DistanceToBoundary(p, a) > kEdgeEpsilon) {
            return Overlap::kPartial;
          }
        }
      }
    }
    return Overlap::kContained;
  }
  if (inside > 0) return Overlap::kPartial;

  bool reaches = false;
  ForEachRing(b, [&](const Ring &ring) {
    for (const Point &p : ring) {
      if (!reaches && PointInShape(p, a)) reaches = true;
    }
  });
  return reaches ? Overlap::kPartial : Overlap::kDisjoint;
}

MultiPolygon ParseGeoJsonGeometry(const Json &geometry) {
  if (!geometry.is_object()) throw Error("geometry must be an object");
  std::string type = RequireString(geometry, "type");
  if (type == "Feature") return ParseGeoJsonGeometry(RequireField(geometry, "geometry"));
  const Json &coords = RequireField(geometry, "coordinates");
  MultiPolygon shape;
  if (type == "Polygon") {
    shape.push_back(ParsePolygon(coords));
  } else if (type == "MultiPolygon") {
    if (!coords.is_array() || coords.empty()) {
      throw Error("multipolygon must have at least one polygon");
    }
    for (const Json &polygon : coords) shape.push_back(ParsePolygon(polygon));
  } else {
    throw Error("unsupported geometry type '" + type + "'");
  }
  return shape;
}

Json ToGeoJson(const MultiPolygon &shape) {
  auto polygon_json = [](const Polygon &polygon) {
    Json rings = Json::array();
    rings.push_back(RingToJson(polygon.exterior));
    for (const Ring &hole : polygon.holes) rings.push_back(RingToJson(hole));
    return rings;
  };
  if (shape.size() == 1) {
    return Json{{"type", "Polygon"}, {"coordinates", polygon_json(shape[0])}};
  }
  Json polygons = Json::array();
  for (const Polygon &polygon : shape) polygons.push_back(polygon_json(polygon));
  return Json{{"type", "MultiPolygon"}, {"coordinates", polygons}};
}

Polygon RectanglePolygon(double min_lon, double min_lat, double max_lon,
                         double max_lat) {
  Polygon polygon;
  polygon.exterior = {{min_lon, min_lat},
                      {max_lon, min_lat},
                      {max_lon, max_lat},
                      {min_lon, max_lat},
                      {min_lon, min_lat}};
  return polygon;
}

}  // namespace deedscan
