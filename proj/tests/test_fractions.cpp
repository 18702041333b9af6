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

#include "support.hpp"

using namespace segcross;
using namespace segcross::test;

TEST_CASE("fraction construction") {
    Fraction f = Fraction::of(4, 8);
    CHECK(f.num == 1);
    CHECK(f.den == 2);
    CHECK_THROWS_AS(Fraction::of(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(Fraction::of(1, 0), std::invalid_argument);
    CHECK(Fraction::of(0, 7) == Fraction{0, 1});
    CHECK(Fraction{1, 3} < Fraction{1, 2});
}

TEST_CASE("mirror is an involution, step is monotone") {
    auto all = closure(30);
    for (const Fraction& f : all.fractions()) {
        CHECK(mirror(mirror(f)) == f);
        Fraction s = step(f);
        CHECK(s <= f);
        CHECK((s == f) == (f.num == 0));
    }
}

TEST_CASE("closure of small denominators") {
    auto base = closure(1);
    REQUIRE(base.fractions().size() == 2);
    CHECK(base.fractions()[0] == Fraction{0, 1});
    CHECK(base.fractions()[1] == Fraction{1, 1});

    auto f5 = closure(5);
    std::vector<Fraction> expect = {{0, 1}, {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2},
                                    {3, 5}, {2, 3}, {3, 4}, {4, 5}, {1, 1}};
    CHECK(f5.fractions() == expect);

    CHECK(closure(10).fractions().size() == 33);
}

TEST_CASE("closure equals the Farey sequence") {
    for (std::uint64_t n : {1, 2, 3, 7, 12, 25}) {
        auto got = closure(n);
        CHECK(got.fractions() == farey_oracle(n));
        CHECK(got.fractions().size() == farey_size_by_totients(n));
    }
}

TEST_CASE("derivation traces replay to their targets") {
    auto res = closure(12);
    for (const Fraction& f : res.fractions()) {
        DerivationTrace t = res.trace_of(f);
        CHECK(t.target == f);
        CHECK(replay(t));
    }
    CHECK_THROWS_AS(res.trace_of(Fraction{1, 13}), std::invalid_argument);
}

TEST_CASE("fraction to edge point") {
    ExactPoint D = pt(0, 0), E = pt(4, 0);
    CHECK(fraction_to_edge_point(D, E, Fraction{1, 4}) == pt(3, 0));
    CHECK(fraction_to_edge_point(D, E, Fraction{0, 1}) == E);
    CHECK(fraction_to_edge_point(D, E, Fraction{1, 1}) == D);
    CHECK_THROWS_AS(fraction_to_edge_point(D, D, Fraction{1, 2}), std::invalid_argument);
}

TEST_CASE("midpoint configuration") {
    auto cfg = MidpointConfig::from_triangle(pt(0, 0), pt(4, 0), pt(0, 4));
    CHECK(cfg.D == pt(2, 0));
    CHECK(cfg.E == pt(2, 2));
    CHECK(cfg.F == pt(0, 2));
    CHECK_THROWS_AS(MidpointConfig::from_triangle(pt(0, 0), pt(1, 1), pt(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("restricted iteration first steps") {
    auto cfg = MidpointConfig::from_triangle(pt(0, 0), pt(4, 0), pt(0, 4));
    auto res = restricted_iteration(cfg, 1);

    // depth 0 carries the vertices, ratios 0 and 1 on every edge
    for (int e = 0; e < 3; ++e) {
        auto d0 = res.at_depth(e, 0);
        CHECK(d0 == std::vector<Fraction>{{0, 1}, {1, 1}});
    }
    // depth 1 adds the midpoint ratio on every edge; on DE it is the point
    // (2,1), the crossing of BF with DE
    auto bf_de = segment_intersection(Segment(pt(4, 0), pt(0, 2)), Segment(pt(2, 0), pt(2, 2)));
    REQUIRE(bf_de.has_value());
    CHECK(*bf_de == pt(2, 1));
    for (int e = 0; e < 3; ++e) {
        auto d1 = res.at_depth(e, 1);
        CHECK(d1 == std::vector<Fraction>{{0, 1}, {1, 2}, {1, 1}});
    }
    CHECK_THROWS_AS(restricted_iteration(cfg, 0), std::invalid_argument);
}

TEST_CASE("single-step ratio identity on a spot instance") {
    // G = F on edge EF (ratio |EG|/|EF| = 1); H = BG x DE has |EH|/|DE| = 1/2
    ExactPoint B = pt(4, 0), D = pt(2, 0), E = pt(2, 2), F = pt(0, 2);
    auto h = segment_intersection(Segment(B, F), Segment(D, E));
    REQUIRE(h.has_value());
    ExactScalar ratio = (h->x - E.x) * (D.x - E.x) + (h->y - E.y) * (D.y - E.y);
    ExactScalar len = squared_distance(D, E);
    CHECK(ratio / len == ExactScalar(1, 2));
}

TEST_CASE("edge ratio sets are identical at every depth") {
    auto check_config = [](const MidpointConfig& cfg, int depth) {
        auto res = restricted_iteration(cfg, depth);
        CHECK(res.edges[0].first_depth == res.edges[1].first_depth);
        CHECK(res.edges[0].first_depth == res.edges[2].first_depth);
    };
    check_config(MidpointConfig::from_triangle(pt(0, 0), pt(4, 0), pt(0, 4)), 6);
    check_config(MidpointConfig::from_triangle(pt(-3, 1), pt(5, 2), pt(1, 7)), 5);
    check_config(MidpointConfig::from_triangle(pt("1/2", 0), pt("7/3", "1/5"), pt(1, 3)), 5);
}

TEST_CASE("every emitted ratio is constructible") {
    auto cfg = MidpointConfig::from_triangle(pt(0, 0), pt(4, 0), pt(0, 4));
    auto res = restricted_iteration(cfg, 6);
    std::uint64_t max_den = 0;
    for (const auto& [f, d] : res.edges[0].first_depth) max_den = std::max(max_den, f.den);
    auto cl = closure(max_den);
    for (int e = 0; e < 3; ++e)
        for (const auto& [f, d] : res.edges[static_cast<std::size_t>(e)].first_depth)
            CHECK(cl.contains(f));
}

TEST_CASE("ratio step law holds for random configurations and ratios") {
    Rng rng(13001);
    auto cl = closure(12);
    const auto& fracs = cl.fractions();
    int done = 0;
    while (done < 50) {
        ExactPoint A = rng.point(10, 3), B = rng.point(10, 3), C = rng.point(10, 3);
        if (orientation(A, B, C) == 0) continue;
        MidpointConfig cfg = MidpointConfig::from_triangle(A, B, C);
        const Fraction& f =
            fracs[static_cast<std::size_t>(rng.integer(0, static_cast<long>(fracs.size() - 1)))];

        // G on EF with |EG|/|EF| = k/l, H = BG x DE, expect |EH|/|DE| = k/(k+l)
        ExactPoint G = fraction_to_edge_point(cfg.F, cfg.E, f);
        ExactPoint H = (G == cfg.E)
                           ? cfg.E
                           : line_intersection(cfg.B, G, cfg.D, cfg.E);
        ExactScalar num = (H.x - cfg.E.x) * (cfg.D.x - cfg.E.x) +
                          (H.y - cfg.E.y) * (cfg.D.y - cfg.E.y);
        ExactScalar den = squared_distance(cfg.D, cfg.E);
        Fraction want = step(f);
        CHECK(num / den == ExactScalar(static_cast<long>(want.num), static_cast<long>(want.den)));
        ++done;
    }
}
