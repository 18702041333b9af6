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

#include <vector>

#include "segcross/point.hpp"

namespace segcross {

/// Degeneracy of a convex region. Never silently promoted: callers must
/// handle all four tags.
enum class RegionTag { empty, point, segment, polygon };

const char* to_string(RegionTag tag);

/// Convex region in canonical form.
///
/// For tag == polygon the vertex list is strictly convex (every consecutive
/// triple a left turn), counterclockwise, with no three consecutive vertices
/// collinear, rotated so the lexicographically smallest vertex comes first.
/// For point/segment the list has 1/2 entries (segment endpoints ordered).
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    static ConvexPolygon make_empty() { return {}; }
    static ConvexPolygon make_point(ExactPoint p);
    static ConvexPolygon make_segment(ExactPoint p, ExactPoint q);
    /// Validates strict convexity and CCW order; throws std::invalid_argument.
    static ConvexPolygon make_polygon(std::vector<ExactPoint> ccw_vertices);

    RegionTag tag() const { return tag_; }
    bool is_empty() const { return tag_ == RegionTag::empty; }
    const std::vector<ExactPoint>& vertices() const { return verts_; }

    /// Twice the signed area (zero unless tag == polygon).
    ExactScalar area_twice() const;

    friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

private:
    RegionTag tag_ = RegionTag::empty;
    std::vector<ExactPoint> verts_;
};

}  // namespace segcross
