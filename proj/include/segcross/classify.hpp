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

#include <array>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "segcross/iterate.hpp"

namespace segcross {

enum class ConfigKind {
    non_exceptional,
    exceptional_i,    // all points on a line
    exceptional_ii,   // all but one on a line
    exceptional_iii,  // all but two on a line, the two strictly on opposite sides
    exceptional_iv,   // triangle nested in a triangle, inner pairs collinear with outer points
    undecided_structural,  // no structural match, but the iteration probe reached a fixpoint
};

const char* to_string(ConfigKind k);

/// A line spanned by two distinct witness points of the set.
struct LineWitness {
    ExactPoint p, q;
};

struct WitnessI {
    LineWitness line;
};

struct WitnessII {
    LineWitness line;
    ExactPoint off;
};

struct WitnessIII {
    LineWitness line;
    ExactPoint off_a, off_b;  // strictly opposite orientation signs vs line
};

struct CollinearTriple {
    ExactPoint inner_a, inner_b, outer;
};

struct WitnessIV {
    std::array<ExactPoint, 3> outer;
    std::array<ExactPoint, 3> inner;
    std::array<CollinearTriple, 3> pairing;
};

/// Evidence from the iteration probe: either a fixpoint (finite limit set) or
/// the limits that tripped while new points were still appearing.
struct ProbeWitness {
    bool fixpoint = false;
    std::size_t total_points = 0;
    IterationReport report;
    IterationLimits limits_used;
};

struct ConfigClass {
    ConfigKind kind = ConfigKind::non_exceptional;
    std::variant<std::monostate, WitnessI, WitnessII, WitnessIII, WitnessIV, ProbeWitness>
        witness;
};

/// Probe bounds that let exceptional sets reach their fixpoint quickly while
/// cutting off the unbounded growth of non-exceptional ones.
inline constexpr IterationLimits kDefaultProbeLimits{4, 600, 4096};

/// Structural tests for cases (i)-(iv) in order, then the iteration probe as
/// a fallback: fixpoint means exceptional-by-evidence (undecided_structural),
/// tripped limits mean non_exceptional. Throws std::invalid_argument when
/// |s| < 2 or s has duplicates.
ConfigClass classify(std::span<const ExactPoint> s,
                     const IterationLimits& probe_limits = kDefaultProbeLimits);

/// Straight-line embedded graph. Planarity invariant: no two edges intersect
/// in a single point other than a shared endpoint.
struct GeometricGraph {
    std::vector<ExactPoint> vertices;
    std::vector<std::pair<int, int>> edges;

    /// Validates indices, distinct vertices and the planarity invariant.
    static GeometricGraph checked(std::vector<ExactPoint> vertices,
                                  std::vector<std::pair<int, int>> edges);
};

struct DilationResult {
    /// Max over vertex pairs of shortest-path length / Euclidean distance.
    double value = 0.0;
    /// True when every vertex pair has a path running straight along its own
    /// segment, verified by exact collinearity tests; then value == 1 exactly.
    bool certified = false;
};

/// Throws std::invalid_argument when the graph is disconnected or has < 2
/// vertices.
DilationResult graph_dilation(const GeometricGraph& g);

}  // namespace segcross
