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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "segcross/fractions.hpp"
#include "segcross/geometry.hpp"

namespace segcross::test {

struct Coord {
    ExactScalar v;
    Coord(int n) : v(static_cast<long>(n)) {}
    Coord(long n) : v(n) {}
    Coord(const char* s) : v(ExactScalar::parse(s)) {}
};

inline ExactPoint pt(Coord x, Coord y) { return {std::move(x.v), std::move(y.v)}; }

// Rational approximation of a regular pentagon: convex position, n > 4,
// no three points collinear (verified in tests).
inline std::vector<ExactPoint> pentagon_fixture() {
    return {pt(0, 100), pt(-95, 31), pt(-59, -81), pt(59, -81), pt(95, 31)};
}

inline std::vector<ExactPoint> square_fixture() {
    return {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
}

// Nested-triangle configuration: inner pairs collinear with distinct outer
// vertices, solved from the collinearity constraints.
inline std::vector<ExactPoint> case_iv_fixture() {
    return {pt(0, 0), pt(6, 0), pt(0, 6), pt(2, 2), pt(1, 1), pt("2/3", "8/3")};
}

// Independent oracle for one generation: every segment between known points,
// every unordered segment pair, singleton intersections only, minus the
// already-known points. Quadratic and oblivious to engine shortcuts.
inline std::vector<ExactPoint> naive_next_generation(const std::vector<ExactPoint>& known) {
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < known.size(); ++i)
        for (std::size_t j = i + 1; j < known.size(); ++j)
            segs.emplace_back(known[i], known[j]);
    std::set<ExactPoint> known_set(known.begin(), known.end());
    std::set<ExactPoint> found;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            auto x = segment_intersection(segs[i], segs[j]);
            if (x && known_set.count(*x) == 0) found.insert(*x);
        }
    return {found.begin(), found.end()};
}

// Direct Farey enumeration, the oracle for the fraction closure.
inline std::vector<Fraction> farey_oracle(std::uint64_t n) {
    std::vector<Fraction> out;
    for (std::uint64_t l = 1; l <= n; ++l)
        for (std::uint64_t k = 0; k <= l; ++k)
            if (std::gcd(k, l) == 1) out.push_back(Fraction{k, l});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// 1 + sum of Euler totients up to n, the expected Farey cardinality.
inline std::size_t farey_size_by_totients(std::uint64_t n) {
    std::vector<std::uint64_t> phi(n + 1);
    std::iota(phi.begin(), phi.end(), 0);
    for (std::uint64_t p = 2; p <= n; ++p)
        if (phi[p] == p)  // prime
            for (std::uint64_t m = p; m <= n; m += p) phi[m] -= phi[m] / p;
    std::size_t total = 1;
    for (std::uint64_t m = 1; m <= n; ++m) total += phi[m];
    return total;
}

class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    ExactScalar rational(long max_num, long max_den) {
        return ExactScalar(integer(-max_num, max_num), integer(1, max_den));
    }

    ExactPoint point(long max_num = 30, long max_den = 6) {
        return {rational(max_num, max_den), rational(max_num, max_den)};
    }

    // n distinct points, no three collinear. With n >= 5 such a set cannot be
    // exceptional: every catalogue configuration carries a collinear triple.
    std::vector<ExactPoint> general_position(std::size_t n, long max_num = 30, long max_den = 6) {
        std::vector<ExactPoint> pts;
        while (pts.size() < n) {
            ExactPoint p = point(max_num, max_den);
            bool ok = std::find(pts.begin(), pts.end(), p) == pts.end();
            for (std::size_t i = 0; ok && i < pts.size(); ++i)
                for (std::size_t j = i + 1; ok && j < pts.size(); ++j)
                    if (orientation(pts[i], pts[j], p) == 0) ok = false;
            if (ok) pts.push_back(std::move(p));
        }
        return pts;
    }

    std::mt19937& raw() { return gen_; }

private:
    std::mt19937 gen_;
};

}  // namespace segcross::test
