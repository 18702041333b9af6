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

#include "segcross/density.hpp"

#include <stdexcept>

#include "segcross/candidate.hpp"
#include "segcross/classify.hpp"

namespace segcross {

CoverageReport coverage_radius(std::span<const ExactPoint> points, const ConvexPolygon& region,
                               int grid_n) {
    if (region.tag() != RegionTag::polygon)
        throw std::invalid_argument("coverage_radius: degenerate region");
    if (points.empty()) throw std::invalid_argument("coverage_radius: empty point set");
    if (grid_n < 1) throw std::invalid_argument("coverage_radius: grid_n must be >= 1");

    ExactScalar xmin = region.vertices()[0].x, xmax = xmin;
    ExactScalar ymin = region.vertices()[0].y, ymax = ymin;
    for (const ExactPoint& v : region.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }

    auto grid_coord = [&](const ExactScalar& lo, const ExactScalar& hi, int i) {
        if (grid_n == 1) return (lo + hi) / ExactScalar(2);
        return lo + ExactScalar(i) * (hi - lo) / ExactScalar(grid_n - 1);
    };

    CoverageReport rep;
    rep.grid_n = grid_n;
    rep.radius_sq = ExactScalar(-1);
    for (int iy = 0; iy < grid_n; ++iy) {
        ExactScalar y = grid_coord(ymin, ymax, iy);
        for (int ix = 0; ix < grid_n; ++ix) {
            ExactPoint sample{grid_coord(xmin, xmax, ix), y};
            if (point_in_convex_polygon(sample, region) == Containment::outside) continue;
            ++rep.samples_in_region;
            ExactScalar best = squared_distance(sample, points[0]);
            for (std::size_t k = 1; k < points.size() && !best.is_zero(); ++k) {
                ExactScalar d = squared_distance(sample, points[k]);
                if (d < best) best = d;
            }
            if (best > rep.radius_sq) {
                rep.radius_sq = best;
                rep.worst_sample = sample;
            }
        }
    }
    if (rep.samples_in_region == 0)
        throw std::invalid_argument("coverage_radius: no grid sample falls in the region");
    return rep;
}

std::vector<CoverageReport> density_profile(std::span<const ExactPoint> s,
                                            const IterationLimits& limits, int grid_n) {
    ConfigClass cls = classify(s);
    if (cls.kind != ConfigKind::non_exceptional)
        throw std::invalid_argument(
            "density_profile: exceptional configuration (run classify for the verdict)");
    RegionResult rr = candidate(s);
    if (rr.region.tag() != RegionTag::polygon)
        throw std::invalid_argument("density_profile: degenerate candidate region");

    auto [gen, report] = iterate(s, limits);
    std::vector<CoverageReport> out;
    for (int d = 1; d <= gen.current_depth(); ++d) {
        std::vector<ExactPoint> pts = gen.points_up_to(d);
        CoverageReport rep = coverage_radius(pts, rr.region, grid_n);
        rep.depth = d;
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace segcross
