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

#include "segcross/classify.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace segcross {

const char* to_string(ConfigKind k) {
    switch (k) {
        case ConfigKind::non_exceptional: return "non_exceptional";
        case ConfigKind::exceptional_i: return "exceptional_i";
        case ConfigKind::exceptional_ii: return "exceptional_ii";
        case ConfigKind::exceptional_iii: return "exceptional_iii";
        case ConfigKind::exceptional_iv: return "exceptional_iv";
        case ConfigKind::undecided_structural: return "undecided_structural";
    }
    return "?";
}

namespace {

bool all_collinear(std::span<const ExactPoint> pts) {
    if (pts.size() <= 2) return true;
    for (std::size_t i = 2; i < pts.size(); ++i)
        if (orientation(pts[0], pts[1], pts[i]) != 0) return false;
    return true;
}

// Strictly inside the triangle (o0, o1, o2), any orientation of the triple.
bool strictly_inside_triangle(const ExactPoint& p, const ExactPoint& o0,
                              const ExactPoint& o1, const ExactPoint& o2) {
    int s0 = orientation(o0, o1, p);
    int s1 = orientation(o1, o2, p);
    int s2 = orientation(o2, o0, p);
    return (s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0);
}

std::optional<WitnessIV> try_case_iv(const std::vector<ExactPoint>& pts) {
    if (pts.size() != 6) return std::nullopt;
    // all 3-3 splits into an outer and an inner triangle
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) {
                std::array<ExactPoint, 3> outer{pts[static_cast<std::size_t>(a)],
                                                pts[static_cast<std::size_t>(b)],
                                                pts[static_cast<std::size_t>(c)]};
                std::array<ExactPoint, 3> inner;
                int k = 0;
                for (int i = 0; i < 6; ++i)
                    if (i != a && i != b && i != c) inner[static_cast<std::size_t>(k++)] = pts[static_cast<std::size_t>(i)];
                if (orientation(outer[0], outer[1], outer[2]) == 0) continue;
                if (orientation(inner[0], inner[1], inner[2]) == 0) continue;
                bool nested = true;
                for (const ExactPoint& p : inner)
                    nested = nested && strictly_inside_triangle(p, outer[0], outer[1], outer[2]);
                if (!nested) continue;

                // each inner pair must be collinear with exactly one outer point,
                // and the three outer points must be distinct across the pairs
                constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
                std::array<int, 3> assigned{-1, -1, -1};
                bool ok = true;
                for (int pi = 0; pi < 3 && ok; ++pi) {
                    const ExactPoint& ia = inner[static_cast<std::size_t>(kPairs[pi][0])];
                    const ExactPoint& ib = inner[static_cast<std::size_t>(kPairs[pi][1])];
                    int hit = -1;
                    for (int oi = 0; oi < 3; ++oi) {
                        if (orientation(ia, ib, outer[static_cast<std::size_t>(oi)]) == 0) {
                            if (hit != -1) { hit = -2; break; }  // more than one
                            hit = oi;
                        }
                    }
                    if (hit < 0) { ok = false; break; }
                    assigned[static_cast<std::size_t>(pi)] = hit;
                }
                if (!ok) continue;
                if (assigned[0] == assigned[1] || assigned[0] == assigned[2] ||
                    assigned[1] == assigned[2])
                    continue;

                WitnessIV w;
                w.outer = outer;
                w.inner = inner;
                for (int pi = 0; pi < 3; ++pi)
                    w.pairing[static_cast<std::size_t>(pi)] = {
                        inner[static_cast<std::size_t>(kPairs[pi][0])],
                        inner[static_cast<std::size_t>(kPairs[pi][1])],
                        outer[static_cast<std::size_t>(assigned[static_cast<std::size_t>(pi)])]};
                return w;
            }
    return std::nullopt;
}

}  // namespace

ConfigClass classify(std::span<const ExactPoint> s, const IterationLimits& probe_limits) {
    if (s.size() < 2) throw std::invalid_argument("classify: need at least 2 points");
    std::vector<ExactPoint> pts(s.begin(), s.end());
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw std::invalid_argument("classify: duplicate points");
    const std::size_t n = pts.size();

    // (i) all points on a line
    if (all_collinear(pts))
        return {ConfigKind::exceptional_i, WitnessI{{pts[0], pts[1]}}};

    // (ii) all but one on a line
    if (n >= 3) {
        std::vector<ExactPoint> rest;
        for (std::size_t off = 0; off < n; ++off) {
            rest.clear();
            for (std::size_t i = 0; i < n; ++i)
                if (i != off) rest.push_back(pts[i]);
            if (all_collinear(rest) && orientation(rest[0], rest[1], pts[off]) != 0)
                return {ConfigKind::exceptional_ii, WitnessII{{rest[0], rest[1]}, pts[off]}};
        }
    }

    // (iii) all but two on a line, the two strictly on opposite sides. The
    // crossing point of the pair's segment with the hull of the line points
    // never has to be present; when it is, it simply counts as a line point.
    if (n >= 4) {
        std::vector<ExactPoint> rest;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                rest.clear();
                for (std::size_t k = 0; k < n; ++k)
                    if (k != i && k != j) rest.push_back(pts[k]);
                if (!all_collinear(rest)) continue;
                int si = orientation(rest[0], rest[1], pts[i]);
                int sj = orientation(rest[0], rest[1], pts[j]);
                if (si * sj < 0)
                    return {ConfigKind::exceptional_iii,
                            WitnessIII{{rest[0], rest[1]}, pts[i], pts[j]}};
            }
    }

    // (iv) nested triangles, only attempted at exactly 6 points
    if (auto w = try_case_iv(pts))
        return {ConfigKind::exceptional_iv, *w};

    // Fixpoint probe. A fixpoint certifies a finite limit set (exceptional by
    // evidence); tripped limits with growth still happening read as
    // non-exceptional, with the probe bounds recorded in the verdict.
    auto [gen, rep] = iterate(pts, probe_limits);
    ProbeWitness pw{rep.fixpoint, gen.size(), rep, probe_limits};
    if (rep.fixpoint) return {ConfigKind::undecided_structural, std::move(pw)};
    return {ConfigKind::non_exceptional, std::move(pw)};
}

GeometricGraph GeometricGraph::checked(std::vector<ExactPoint> vertices,
                                       std::vector<std::pair<int, int>> edges) {
    const int n = static_cast<int>(vertices.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (vertices[static_cast<std::size_t>(i)] == vertices[static_cast<std::size_t>(j)])
                throw std::invalid_argument("GeometricGraph: duplicate vertices");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("GeometricGraph: edge index out of range");
        if (u == v) throw std::invalid_argument("GeometricGraph: self loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    auto vert = [&](int i) { return vertices[static_cast<std::size_t>(i)]; };
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            Segment sa(vert(edges[a].first), vert(edges[a].second));
            Segment sb(vert(edges[b].first), vert(edges[b].second));
            auto x = segment_intersection(sa, sb);
            if (!x) continue;
            bool shared = edges[a].first == edges[b].first || edges[a].first == edges[b].second ||
                          edges[a].second == edges[b].first || edges[a].second == edges[b].second;
            if (!shared || !(*x == vert(edges[a].first) || *x == vert(edges[a].second)))
                throw std::invalid_argument("GeometricGraph: crossing edges violate planarity");
        }

    GeometricGraph g;
    g.vertices = std::move(vertices);
    g.edges = std::move(edges);
    return g;
}

namespace {

// Exact delta(p,q) == 1 witness: a monotone chain of graph edges lying on the
// segment pq. Edges collinear with pq connect points on it; reachability over
// forward steps is checked on the exact segment parameters.
bool straight_path_exists(const GeometricGraph& g, int from, int to,
                          const std::vector<std::vector<int>>& adj) {
    const ExactPoint& p = g.vertices[static_cast<std::size_t>(from)];
    const ExactPoint& q = g.vertices[static_cast<std::size_t>(to)];
    Segment pq(p, q);
    const int n = static_cast<int>(g.vertices.size());
    std::vector<char> on_seg(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        on_seg[static_cast<std::size_t>(i)] =
            on_segment(g.vertices[static_cast<std::size_t>(i)], pq) ? 1 : 0;
    if (!on_seg[static_cast<std::size_t>(from)] || !on_seg[static_cast<std::size_t>(to)])
        return false;

    ExactScalar dx = q.x - p.x, dy = q.y - p.y;
    auto param = [&](int i) {
        const ExactPoint& v = g.vertices[static_cast<std::size_t>(i)];
        return (v.x - p.x) * dx + (v.y - p.y) * dy;
    };

    // BFS over forward edges (strictly increasing parameter)
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> bfs;
    bfs.push(from);
    seen[static_cast<std::size_t>(from)] = 1;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        if (u == to) return true;
        ExactScalar tu = param(u);
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (!on_seg[static_cast<std::size_t>(v)] || seen[static_cast<std::size_t>(v)])
                continue;
            if (param(v) > tu) {
                seen[static_cast<std::size_t>(v)] = 1;
                bfs.push(v);
            }
        }
    }
    return false;
}

}  // namespace

DilationResult graph_dilation(const GeometricGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    if (n < 2) throw std::invalid_argument("graph_dilation: need at least 2 vertices");

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    // connectivity
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::queue<int> bfs;
        bfs.push(0);
        seen[0] = 1;
        int cnt = 1;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int v : adj[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    ++cnt;
                    bfs.push(v);
                }
        }
        if (cnt != n) throw std::invalid_argument("graph_dilation: disconnected graph");
    }

    bool all_certified = true;
    for (int i = 0; i < n && all_certified; ++i)
        for (int j = i + 1; j < n && all_certified; ++j)
            all_certified = straight_path_exists(g, i, j, adj);
    if (all_certified) return {1.0, true};

    // Floyd-Warshall on Euclidean edge lengths
    const long double inf = std::numeric_limits<long double>::infinity();
    std::vector<std::vector<long double>> dist(
        static_cast<std::size_t>(n), std::vector<long double>(static_cast<std::size_t>(n), inf));
    for (int i = 0; i < n; ++i) dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
    for (auto [u, v] : g.edges) {
        long double d = sqrtl(static_cast<long double>(
            squared_distance(g.vertices[static_cast<std::size_t>(u)],
                             g.vertices[static_cast<std::size_t>(v)])
                .to_double()));
        dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = d;
        dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = d;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long double via = dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                                  dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                if (via < dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = via;
            }

    long double worst = 1.0L;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long double eu = sqrtl(static_cast<long double>(
                squared_distance(g.vertices[static_cast<std::size_t>(i)],
                                 g.vertices[static_cast<std::size_t>(j)])
                    .to_double()));
            long double ratio = dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] / eu;
            if (ratio > worst) worst = ratio;
        }
    return {static_cast<double>(worst), false};
}

}  // namespace segcross
