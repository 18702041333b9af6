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

#include <cstddef>
#include <string>

#include "segcross/scalar.hpp"

namespace segcross {

/// 2D point with exact rational coordinates. Value-semantic; two points are
/// equal iff both coordinates are equal.
struct ExactPoint {
    ExactScalar x;
    ExactScalar y;

    friend bool operator==(const ExactPoint& a, const ExactPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    /// Lexicographic (x, then y); used for canonical orderings, not geometry.
    friend std::strong_ordering operator<=>(const ExactPoint& a, const ExactPoint& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }

    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

inline ExactScalar squared_distance(const ExactPoint& a, const ExactPoint& b) {
    ExactScalar dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Closed segment between two distinct points, stored with endpoints in
/// lexicographic order so {a,b} and {b,a} compare equal.
struct Segment {
    ExactPoint a;
    ExactPoint b;

    Segment(ExactPoint p, ExactPoint q);

    friend bool operator==(const Segment&, const Segment&) = default;
};

std::size_t hash_value(const ExactPoint& p);

}  // namespace segcross

template <>
struct std::hash<segcross::ExactPoint> {
    std::size_t operator()(const segcross::ExactPoint& p) const { return segcross::hash_value(p); }
};
