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

/// Finite-depth coverage statistics over a region: the exact max over grid
/// samples of the min squared distance to the point set.
struct CoverageReport {
    int depth = 0;
    int grid_n = 0;
    std::size_t samples_in_region = 0;
    ExactScalar radius_sq;
    ExactPoint worst_sample;
};

/// Samples a grid_n x grid_n affine grid over the region's bounding box,
/// keeps samples inside-or-on the region, and returns the exact worst
/// min-squared-distance to the point set (first worst sample in row-major
/// order). Throws std::invalid_argument on a degenerate region, empty point
/// set, grid_n < 1, or when no sample lands in the region.
CoverageReport coverage_radius(std::span<const ExactPoint> points, const ConvexPolygon& region,
                               int grid_n);

/// Runs the iteration under the given limits and reports coverage of the
/// candidate region per depth from 1 to the reached depth. Gated: throws
/// std::invalid_argument for exceptional starting sets (classify first) and
/// for degenerate candidates.
std::vector<CoverageReport> density_profile(std::span<const ExactPoint> s,
                                            const IterationLimits& limits, int grid_n);

}  // namespace segcross
