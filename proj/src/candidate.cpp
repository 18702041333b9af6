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

#include "segcross/candidate.hpp"

#include <stdexcept>

namespace segcross {

RegionResult candidate(std::span<const ExactPoint> s) {
    if (s.size() < 3) throw std::invalid_argument("candidate: need at least 3 points");
    RegionResult result;
    std::vector<ExactPoint> rest;
    rest.reserve(s.size() - 1);
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
        rest.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != skip) rest.push_back(s[i]);
        result.supporting_hulls.push_back(convex_hull(rest));
    }
    ConvexPolygon region = result.supporting_hulls.front();
    for (std::size_t i = 1; i < result.supporting_hulls.size(); ++i)
        region = intersect_convex_polygons(region, result.supporting_hulls[i]);
    result.region = std::move(region);
    return result;
}

CandidateCheckReport check_candidate_properties(std::span<const ExactPoint> s,
                                                const GenerationSet& g) {
    for (const ExactPoint& p : s)
        if (g.depth_of(p) != 0)
            throw std::invalid_argument(
                "check_candidate_properties: generation set was not produced from s");
    if (g.count_at_depth(0) != s.size())
        throw std::invalid_argument(
            "check_candidate_properties: generation set has extra depth-0 points");

    RegionResult rr = candidate(s);
    CandidateCheckReport rep;

    for (const ExactPoint& v : rr.region.vertices()) {
        VertexCheck vc{v, false, -1};
        int d = g.depth_of(v);
        if (d >= 0 && d <= 1) {
            vc.matched = true;
            vc.depth = d;
        }
        rep.vertex_checks.push_back(vc);
    }

    bool have_generated = false;
    for (const auto& [p, d] : g.sorted_entries()) {
        if (d < 1) continue;
        have_generated = true;
        ++rep.generated_checked;
        if (rr.region.is_empty() || !inside_or_on(p, rr.region))
            rep.containment_failures.push_back({p, d});
    }
    rep.lemma_violation = rr.region.is_empty() && have_generated;

    bool vertices_ok = true;
    for (const auto& vc : rep.vertex_checks) vertices_ok = vertices_ok && vc.matched;
    rep.pass = vertices_ok && rep.containment_failures.empty() && !rep.lemma_violation;
    return rep;
}

}  // namespace segcross
