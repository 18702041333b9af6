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
#include <unordered_map>
#include <utility>
#include <vector>

#include "segcross/geometry.hpp"

namespace segcross {

/// Resource bounds for the generative process. The paper-style iteration runs
/// to infinity; these keep it at desk scale.
struct IterationLimits {
    int max_depth = 8;
    std::size_t max_total_points = 100000;
    /// Bound on the bit length of any coordinate numerator/denominator.
    std::size_t max_coordinate_bits = 8192;

    void validate() const;
};

enum class LimitKind { none, max_depth, max_total_points, max_coordinate_bits };

const char* to_string(LimitKind k);

struct RoundStats {
    int depth = 0;              // depth assigned to this round's new points
    std::size_t new_points = 0;
    double wall_ms = 0.0;
};

struct IterationReport {
    std::vector<RoundStats> rounds;
    bool fixpoint = false;
    LimitKind limit = LimitKind::none;
};

/// Cumulative point set with per-point discovery depth. Depth-0 points are
/// the starting set; every deeper point is the singleton intersection of two
/// segments spanned by shallower points.
class GenerationSet {
public:
    /// Throws std::invalid_argument on fewer than 2 points or duplicates.
    static GenerationSet from_start(std::span<const ExactPoint> start);

    bool contains(const ExactPoint& p) const { return depth_.count(p) != 0; }
    /// -1 when absent.
    int depth_of(const ExactPoint& p) const;
    int current_depth() const { return current_depth_; }
    std::size_t size() const { return depth_.size(); }

    /// Points with depth <= d, sorted lexicographically (deterministic).
    std::vector<ExactPoint> points_up_to(int d) const;
    /// All (point, depth) entries sorted lexicographically by point.
    std::vector<std::pair<ExactPoint, int>> sorted_entries() const;
    std::size_t count_at_depth(int d) const;

    /// Inserts a batch of new points at depth current_depth()+1. Intended for
    /// the engine; rejects points already present.
    void commit_round(const std::vector<ExactPoint>& pts);

    friend bool operator==(const GenerationSet& a, const GenerationSet& b) {
        return a.current_depth_ == b.current_depth_ && a.depth_ == b.depth_;
    }

private:
    std::unordered_map<ExactPoint, int> depth_;
    int current_depth_ = 0;
};

/// One full round: exactly the singleton intersections of all segments
/// spanned by points of g that are not already in g. Result is sorted
/// (deterministic). Throws std::invalid_argument when g has < 2 points.
std::vector<ExactPoint> next_generation(const GenerationSet& g);

/// Runs the process until a fixpoint (a round with no new points) or a limit
/// trips. Rounds commit atomically: when a limit aborts a round, that round's
/// partial discoveries are discarded, so the result is deterministic and
/// independent of pair enumeration order.
std::pair<GenerationSet, IterationReport> iterate(std::span<const ExactPoint> start,
                                                  const IterationLimits& limits);

}  // namespace segcross
