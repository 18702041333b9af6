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

#include <doctest.h>

#include "segcross/candidate.hpp"
#include "support.hpp"

using namespace segcross;
using namespace segcross::test;

TEST_CASE("triangle candidate is empty") {
    std::vector<ExactPoint> tri = {pt(0, 0), pt(4, 0), pt(1, 3)};
    RegionResult rr = candidate(tri);
    CHECK(rr.region.tag() == RegionTag::empty);
    CHECK(rr.supporting_hulls.size() == 3);
    for (const ConvexPolygon& h : rr.supporting_hulls) CHECK(h.tag() == RegionTag::segment);
}

TEST_CASE("square candidate is its center") {
    RegionResult rr = candidate(square_fixture());
    REQUIRE(rr.region.tag() == RegionTag::point);
    CHECK(rr.region.vertices()[0] == pt("1/2", "1/2"));
    CHECK(rr.supporting_hulls.size() == 4);
}

TEST_CASE("pentagon candidate is the inner five-gon of diagonal crossings") {
    auto pent = pentagon_fixture();
    RegionResult rr = candidate(pent);
    REQUIRE(rr.region.tag() == RegionTag::polygon);
    CHECK(rr.region.vertices().size() == 5);

    // oracle: the crossings of consecutive second-neighbor diagonals
    std::vector<ExactPoint> crossings;
    const std::size_t n = pent.size();
    for (std::size_t i = 0; i < n; ++i) {
        Segment d1(pent[(i + n - 1) % n], pent[(i + 1) % n]);
        Segment d2(pent[i], pent[(i + 2) % n]);
        auto x = segment_intersection(d1, d2);
        REQUIRE(x.has_value());
        crossings.push_back(*x);
    }
    CHECK(rr.region == convex_hull(crossings));
}

TEST_CASE("candidate region is contained in every supporting hull") {
    Rng rng(11001);
    for (int trial = 0; trial < 30; ++trial) {
        auto pts = rng.general_position(static_cast<std::size_t>(rng.integer(3, 8)), 15, 4);
        RegionResult rr = candidate(pts);
        if (rr.region.is_empty()) continue;
        for (const ExactPoint& v : rr.region.vertices())
            for (const ConvexPolygon& h : rr.supporting_hulls) CHECK(inside_or_on(v, h));
    }
}

TEST_CASE("candidate rejects tiny inputs") {
    std::vector<ExactPoint> two = {pt(0, 0), pt(1, 0)};
    CHECK_THROWS_AS(candidate(two), std::invalid_argument);
}

TEST_CASE("candidate property check on fixtures") {
    IterationLimits lim;
    lim.max_depth = 2;

    SUBCASE("pentagon passes with all vertices found at depth 1") {
        auto pent = pentagon_fixture();
        auto [gen, rep] = iterate(pent, lim);
        CandidateCheckReport chk = check_candidate_properties(pent, gen);
        CHECK(chk.pass);
        CHECK_FALSE(chk.lemma_violation);
        CHECK(chk.vertex_checks.size() == 5);
        for (const auto& vc : chk.vertex_checks) {
            CHECK(vc.matched);
            CHECK(vc.depth == 1);
        }
        CHECK(chk.generated_checked == 34);
        CHECK(chk.containment_failures.empty());
    }

    SUBCASE("square passes with its unique generated point") {
        auto sq = square_fixture();
        auto [gen, rep] = iterate(sq, lim);
        CandidateCheckReport chk = check_candidate_properties(sq, gen);
        CHECK(chk.pass);
        CHECK(chk.vertex_checks.size() == 1);
        CHECK(chk.vertex_checks[0].depth == 1);
        CHECK(chk.generated_checked == 1);
    }

    SUBCASE("collinear configuration passes vacuously") {
        std::vector<ExactPoint> line = {pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)};
        auto [gen, rep] = iterate(line, lim);
        REQUIRE(rep.fixpoint);
        CandidateCheckReport chk = check_candidate_properties(line, gen);
        CHECK(chk.pass);
        CHECK(chk.generated_checked == 0);
    }

    SUBCASE("mismatched generation set is rejected") {
        auto [gen, rep] = iterate(square_fixture(), lim);
        CHECK_THROWS_AS(check_candidate_properties(pentagon_fixture(), gen),
                        std::invalid_argument);
    }
}

TEST_CASE("candidate properties hold on random configurations") {
    Rng rng(11002);
    IterationLimits lim;
    lim.max_depth = 2;
    for (int trial = 0; trial < 20; ++trial) {
        auto pts = rng.general_position(static_cast<std::size_t>(rng.integer(5, 7)), 20, 5);
        auto [gen, rep] = iterate(pts, lim);
        CandidateCheckReport chk = check_candidate_properties(pts, gen);
        CHECK(chk.pass);
    }
}
