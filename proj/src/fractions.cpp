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

#include "segcross/fractions.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

#include "segcross/geometry.hpp"

namespace segcross {

Fraction Fraction::of(std::uint64_t k, std::uint64_t l) {
    if (l == 0) throw std::invalid_argument("Fraction: zero denominator");
    if (k > l) throw std::invalid_argument("Fraction: value must lie in [0, 1]");
    std::uint64_t g = std::gcd(k, l);
    return {k / g, l / g};
}

std::string Fraction::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Fraction mirror(const Fraction& f) { return Fraction{f.den - f.num, f.den}; }

Fraction step(const Fraction& f) {
    // gcd(k, k+l) = gcd(k, l) = 1, so the result is already reduced
    return Fraction{f.num, f.num + f.den};
}

const char* to_string(Rule r) { return r == Rule::mirror ? "mirror" : "step"; }

bool replay(const DerivationTrace& t) {
    Fraction zero{0, 1}, one{1, 1};
    if (t.steps.empty()) return t.target == zero || t.target == one;
    const Fraction& first = t.steps.front().input;
    if (!(first == zero || first == one)) return false;
    Fraction cur = first;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        if (!(t.steps[i].input == cur)) return false;
        cur = t.steps[i].rule == Rule::mirror ? mirror(cur) : step(cur);
    }
    return cur == t.target;
}

ClosureResult closure(std::uint64_t max_denominator) {
    if (max_denominator < 1) throw std::invalid_argument("closure: max_denominator must be >= 1");
    ClosureResult out;
    std::deque<Fraction> queue;
    auto add = [&](const Fraction& f, std::optional<DerivationStep> via) {
        if (f.den > max_denominator) return;
        if (out.parent_.emplace(f, std::move(via)).second) queue.push_back(f);
    };
    add(Fraction{0, 1}, std::nullopt);
    add(Fraction{1, 1}, std::nullopt);
    while (!queue.empty()) {
        Fraction f = queue.front();
        queue.pop_front();
        add(mirror(f), DerivationStep{Rule::mirror, f});
        add(step(f), DerivationStep{Rule::step, f});
    }
    out.sorted_.reserve(out.parent_.size());
    for (const auto& [f, via] : out.parent_) out.sorted_.push_back(f);
    return out;
}

DerivationTrace ClosureResult::trace_of(const Fraction& f) const {
    auto it = parent_.find(f);
    if (it == parent_.end())
        throw std::invalid_argument("ClosureResult: fraction not in the closure");
    DerivationTrace t;
    t.target = f;
    Fraction cur = f;
    while (true) {
        const auto& via = parent_.at(cur);
        if (!via.has_value()) break;
        t.steps.push_back(*via);
        cur = via->input;
    }
    std::reverse(t.steps.begin(), t.steps.end());
    return t;
}

MidpointConfig MidpointConfig::from_triangle(ExactPoint A, ExactPoint B, ExactPoint C) {
    if (orientation(A, B, C) == 0)
        throw std::invalid_argument("MidpointConfig: triangle vertices are collinear");
    ExactScalar half(1, 2);
    MidpointConfig cfg;
    cfg.D = {(A.x + B.x) * half, (A.y + B.y) * half};
    cfg.E = {(B.x + C.x) * half, (B.y + C.y) * half};
    cfg.F = {(A.x + C.x) * half, (A.y + C.y) * half};
    cfg.A = std::move(A);
    cfg.B = std::move(B);
    cfg.C = std::move(C);
    return cfg;
}

ExactPoint fraction_to_edge_point(const ExactPoint& edge_from, const ExactPoint& edge_to,
                                  const Fraction& f) {
    if (edge_from == edge_to)
        throw std::invalid_argument("fraction_to_edge_point: degenerate edge");
    ExactScalar t(mpz_class(f.num), mpz_class(f.den));
    return {edge_to.x + t * (edge_from.x - edge_to.x), edge_to.y + t * (edge_from.y - edge_to.y)};
}

namespace {

// |P pt| / |PQ| for pt collinear with P, Q, by projection on the edge
// direction; a rational of coordinate differences, no square roots.
Fraction ratio_on_edge(const ExactPoint& pt, const ExactPoint& P, const ExactPoint& Q) {
    ExactScalar dx = Q.x - P.x, dy = Q.y - P.y;
    ExactScalar num = (pt.x - P.x) * dx + (pt.y - P.y) * dy;
    ExactScalar den = dx * dx + dy * dy;
    ExactScalar r = num / den;
    if (r.sign() < 0 || r > ExactScalar(1))
        throw std::logic_error("ratio_on_edge: point outside edge");
    mpz_class n = r.num(), d = r.den();
    if (!n.fits_ulong_p() || !d.fits_ulong_p())
        throw std::overflow_error("ratio_on_edge: ratio does not fit a machine word");
    return Fraction{n.get_ui(), d.get_ui()};
}

}  // namespace

std::vector<Fraction> RestrictedIterationResult::at_depth(int edge, int d) const {
    std::vector<Fraction> out;
    for (const auto& [f, fd] : edges[static_cast<std::size_t>(edge)].first_depth)
        if (fd <= d) out.push_back(f);
    return out;
}

RestrictedIterationResult restricted_iteration(const MidpointConfig& cfg, int depth) {
    if (depth <= 0) throw std::invalid_argument("restricted_iteration: depth must be positive");

    const std::array<std::pair<ExactPoint, ExactPoint>, 3> edges = {
        std::pair{cfg.D, cfg.E}, std::pair{cfg.E, cfg.F}, std::pair{cfg.D, cfg.F}};
    const std::array<ExactPoint, 3> outer = {cfg.A, cfg.B, cfg.C};

    RestrictedIterationResult res;
    res.depth = depth;
    // depth 0: the triangle vertices themselves
    std::vector<std::pair<int, Fraction>> frontier;
    for (int e = 0; e < 3; ++e) {
        res.edges[static_cast<std::size_t>(e)].first_depth[Fraction{0, 1}] = 0;
        res.edges[static_cast<std::size_t>(e)].first_depth[Fraction{1, 1}] = 0;
        frontier.push_back({e, Fraction{0, 1}});
        frontier.push_back({e, Fraction{1, 1}});
    }

    for (int d = 1; d <= depth; ++d) {
        std::vector<std::pair<int, Fraction>> next;
        for (const auto& [e, f] : frontier) {
            ExactPoint p = fraction_to_edge_point(edges[static_cast<std::size_t>(e)].second,
                                                  edges[static_cast<std::size_t>(e)].first, f);
            for (const ExactPoint& v : outer) {
                if (p == v) continue;  // no segment from a point to itself
                Segment seg(p, v);
                for (int t = 0; t < 3; ++t) {
                    Segment edge_seg(edges[static_cast<std::size_t>(t)].first,
                                     edges[static_cast<std::size_t>(t)].second);
                    auto x = segment_intersection(seg, edge_seg);
                    if (!x) continue;
                    Fraction r = ratio_on_edge(*x, edges[static_cast<std::size_t>(t)].first,
                                               edges[static_cast<std::size_t>(t)].second);
                    auto [it, fresh] =
                        res.edges[static_cast<std::size_t>(t)].first_depth.emplace(r, d);
                    if (fresh) next.push_back({t, r});
                }
            }
        }
        frontier = std::move(next);
    }
    return res;
}

}  // namespace segcross
