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

#include <span>
#include <vector>

#include "segcross/iterate.hpp"

namespace segcross {

/// The candidate region of a starting set: the intersection over p in S of
/// all closed half planes containing S minus {p}. For a finite set that inner
/// family collapses to the convex hull of S minus {p}, so the region is the
/// exact intersection of |S| convex hulls.
struct RegionResult {
    ConvexPolygon region;
    std::vector<ConvexPolygon> supporting_hulls;  // one per removed point
};

/// Throws std::invalid_argument when |s| < 3. Degenerate results (empty /
/// point / segment) are first-class outcomes, not errors.
RegionResult candidate(std::span<const ExactPoint> s);

struct VertexCheck {
    ExactPoint vertex;
    bool matched = false;  // exact member of the depth <= 1 point set
    int depth = -1;        // discovery depth when matched
};

struct ContainmentFailure {
    ExactPoint point;
    int depth = 0;
};

struct CandidateCheckReport {
    bool pass = false;
    /// One entry per vertex of the candidate region.
    std::vector<VertexCheck> vertex_checks;
    std::size_t generated_checked = 0;
    std::vector<ContainmentFailure> containment_failures;
    /// Candidate empty while generated intersection points exist. Should be
    /// impossible; indicates a kernel bug.
    bool lemma_violation = false;
};

/// Checks the structural guarantees of the candidate against an iteration
/// run of depth >= 2 on the same starting set: every region vertex is a point
/// of depth <= 1 and every generated point lies inside-or-on the region.
CandidateCheckReport check_candidate_properties(std::span<const ExactPoint> s,
                                                const GenerationSet& g);

}  // namespace segcross
