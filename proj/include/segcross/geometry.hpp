// Copyright 2026 The Segcross Authors
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

#pragma once

#include <optional>
#include <span>

#include "segcross/polygon.hpp"

namespace segcross {

/// Sign of the cross product (q-p) x (r-p): +1 left turn, -1 right turn,
/// 0 collinear. Exact; the basis of every side/collinearity test.
int orientation(const ExactPoint& p, const ExactPoint& q, const ExactPoint& r);

/// True iff p lies on the closed segment.
bool on_segment(const ExactPoint& p, const Segment& s);

/// The unique point x with {x} = s1 cap s2 when the intersection of the two
/// closed segments is a singleton (proper crossings, T-touches and shared
/// endpoints included). Empty when the segments are disjoint or their
/// intersection contains more than one point (collinear overlap).
std::optional<ExactPoint> segment_intersection(const Segment& s1, const Segment& s2);

/// Exact intersection of the supporting lines of (p1,p2) and (q1,q2).
/// Throws std::invalid_argument when the lines are parallel or identical.
ExactPoint line_intersection(const ExactPoint& p1, const ExactPoint& p2,
                             const ExactPoint& q1, const ExactPoint& q2);

/// Convex hull with degeneracy tag. Duplicate input points are merged and
/// points interior to hull edges are excluded from the vertex list.
/// Throws std::invalid_argument on empty input.
ConvexPolygon convex_hull(std::span<const ExactPoint> points);

/// Exact intersection of two convex regions, any degeneracy tags.
ConvexPolygon intersect_convex_polygons(const ConvexPolygon& a, const ConvexPolygon& b);

enum class Containment { interior, boundary, outside };

/// Exact classification of p against the closed region c. Points of
/// degenerate regions (point/segment) classify as boundary or outside.
/// Throws std::invalid_argument when c is empty.
Containment point_in_convex_polygon(const ExactPoint& p, const ConvexPolygon& c);

inline bool inside_or_on(const ExactPoint& p, const ConvexPolygon& c) {
    return point_in_convex_polygon(p, c) != Containment::outside;
}

}  // namespace segcross
