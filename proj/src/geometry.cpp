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

#include "segcross/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace segcross {

Segment::Segment(ExactPoint p, ExactPoint q) {
    if (p == q) throw std::invalid_argument("Segment: endpoints must be distinct");
    if (q < p) std::swap(p, q);
    a = std::move(p);
    b = std::move(q);
}

std::size_t hash_value(const ExactPoint& p) {
    std::size_t h = hash_value(p.x);
    h ^= hash_value(p.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

const char* to_string(RegionTag tag) {
    switch (tag) {
        case RegionTag::empty: return "empty";
        case RegionTag::point: return "point";
        case RegionTag::segment: return "segment";
        case RegionTag::polygon: return "polygon";
    }
    return "?";
}

int orientation(const ExactPoint& p, const ExactPoint& q, const ExactPoint& r) {
    ExactScalar cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return cross.sign();
}

bool on_segment(const ExactPoint& p, const Segment& s) {
    if (orientation(s.a, s.b, p) != 0) return false;
    // collinear: check the coordinate ranges
    auto within = [](const ExactScalar& v, const ExactScalar& lo, const ExactScalar& hi) {
        return (lo <= v && v <= hi) || (hi <= v && v <= lo);
    };
    return within(p.x, s.a.x, s.b.x) && within(p.y, s.a.y, s.b.y);
}

ExactPoint line_intersection(const ExactPoint& p1, const ExactPoint& p2,
                             const ExactPoint& q1, const ExactPoint& q2) {
    ExactScalar d1x = p2.x - p1.x, d1y = p2.y - p1.y;
    ExactScalar d2x = q2.x - q1.x, d2y = q2.y - q1.y;
    ExactScalar den = d1x * d2y - d1y * d2x;
    if (den.is_zero()) throw std::invalid_argument("line_intersection: parallel lines");
    ExactScalar rx = q1.x - p1.x, ry = q1.y - p1.y;
    ExactScalar t = (rx * d2y - ry * d2x) / den;
    return {p1.x + t * d1x, p1.y + t * d1y};
}

std::optional<ExactPoint> segment_intersection(const Segment& s1, const Segment& s2) {
    const ExactPoint &a = s1.a, &b = s1.b, &c = s2.a, &d = s2.b;
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);

    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        // one common supporting line: singleton only when the segments touch
        // in exactly one point
        ExactScalar dx = b.x - a.x, dy = b.y - a.y;
        auto param = [&](const ExactPoint& p) {
            return (p.x - a.x) * dx + (p.y - a.y) * dy;
        };
        ExactScalar len = dx * dx + dy * dy;
        ExactScalar tc = param(c), td = param(d);
        ExactScalar lo = std::max(ExactScalar(0), std::min(tc, td));
        ExactScalar hi = std::min(len, std::max(tc, td));
        if (lo > hi) return std::nullopt;
        if (lo == hi) {
            ExactScalar t = lo / len;
            return ExactPoint{a.x + t * dx, a.y + t * dy};
        }
        return std::nullopt;  // overlap with more than one point
    }
    if (o1 * o2 > 0 || o3 * o4 > 0) return std::nullopt;
    // remaining case: supporting lines cross and the crossing lies on both
    // closed segments
    return line_intersection(a, b, c, d);
}

ConvexPolygon ConvexPolygon::make_point(ExactPoint p) {
    ConvexPolygon c;
    c.tag_ = RegionTag::point;
    c.verts_ = {std::move(p)};
    return c;
}

ConvexPolygon ConvexPolygon::make_segment(ExactPoint p, ExactPoint q) {
    if (p == q) throw std::invalid_argument("ConvexPolygon: degenerate segment");
    if (q < p) std::swap(p, q);
    ConvexPolygon c;
    c.tag_ = RegionTag::segment;
    c.verts_ = {std::move(p), std::move(q)};
    return c;
}

ConvexPolygon ConvexPolygon::make_polygon(std::vector<ExactPoint> ccw) {
    if (ccw.size() < 3) throw std::invalid_argument("ConvexPolygon: need >= 3 vertices");
    const std::size_t n = ccw.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(ccw[i], ccw[(i + 1) % n], ccw[(i + 2) % n]) <= 0)
            throw std::invalid_argument("ConvexPolygon: vertices not strictly convex CCW");
    }
    auto lo = std::min_element(ccw.begin(), ccw.end());
    std::rotate(ccw.begin(), lo, ccw.end());
    ConvexPolygon c;
    c.tag_ = RegionTag::polygon;
    c.verts_ = std::move(ccw);
    return c;
}

ExactScalar ConvexPolygon::area_twice() const {
    ExactScalar s(0);
    if (tag_ != RegionTag::polygon) return s;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const ExactPoint& p = verts_[i];
        const ExactPoint& q = verts_[(i + 1) % verts_.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

ConvexPolygon convex_hull(std::span<const ExactPoint> points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty input");
    std::vector<ExactPoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (pts.size() == 1) return ConvexPolygon::make_point(pts[0]);

    bool all_collinear = true;
    for (std::size_t i = 2; i < pts.size(); ++i)
        if (orientation(pts[0], pts[1], pts[i]) != 0) { all_collinear = false; break; }
    if (all_collinear) return ConvexPolygon::make_segment(pts.front(), pts.back());

    // Andrew's monotone chain, strict turns only
    auto build = [&](auto begin, auto end) {
        std::vector<ExactPoint> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   orientation(chain[chain.size() - 2], chain.back(), *it) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<ExactPoint> lower = build(pts.begin(), pts.end());
    std::vector<ExactPoint> upper = build(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return ConvexPolygon::make_polygon(std::move(lower));
}

Containment point_in_convex_polygon(const ExactPoint& p, const ConvexPolygon& c) {
    switch (c.tag()) {
        case RegionTag::empty:
            throw std::invalid_argument("point_in_convex_polygon: empty region");
        case RegionTag::point:
            return p == c.vertices()[0] ? Containment::boundary : Containment::outside;
        case RegionTag::segment:
            return on_segment(p, Segment(c.vertices()[0], c.vertices()[1]))
                       ? Containment::boundary
                       : Containment::outside;
        case RegionTag::polygon:
            break;
    }
    const auto& v = c.vertices();
    bool on_edge = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        int o = orientation(v[i], v[(i + 1) % v.size()], p);
        if (o < 0) return Containment::outside;
        if (o == 0) on_edge = true;
    }
    return on_edge ? Containment::boundary : Containment::interior;
}

namespace {

std::vector<Segment> boundary_segments(const ConvexPolygon& c) {
    std::vector<Segment> out;
    const auto& v = c.vertices();
    if (c.tag() == RegionTag::segment) {
        out.emplace_back(v[0], v[1]);
    } else if (c.tag() == RegionTag::polygon) {
        for (std::size_t i = 0; i < v.size(); ++i)
            out.emplace_back(v[i], v[(i + 1) % v.size()]);
    }
    return out;
}

}  // namespace

ConvexPolygon intersect_convex_polygons(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.is_empty() || b.is_empty()) return ConvexPolygon::make_empty();

    // The intersection of two convex regions is convex and every extreme
    // point is a vertex of one region inside the other or a boundary-boundary
    // crossing; the hull of those candidates is the exact intersection.
    std::vector<ExactPoint> candidates;
    for (const ExactPoint& p : a.vertices())
        if (inside_or_on(p, b)) candidates.push_back(p);
    for (const ExactPoint& p : b.vertices())
        if (inside_or_on(p, a)) candidates.push_back(p);
    for (const Segment& sa : boundary_segments(a))
        for (const Segment& sb : boundary_segments(b))
            if (auto x = segment_intersection(sa, sb)) candidates.push_back(*x);

    if (candidates.empty()) return ConvexPolygon::make_empty();
    return convex_hull(candidates);
}

}  // namespace segcross
