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

#include "segcross/projective.hpp"

#include <algorithm>

#include "segcross/geometry.hpp"

namespace segcross {

Homography Homography::from_matrix(std::array<ExactScalar, 9> m) {
    Homography h;
    h.m_ = std::move(m);
    if (h.det().is_zero()) throw std::invalid_argument("Homography: singular matrix");
    return h;
}

ExactScalar Homography::det() const {
    const auto& m = m_;
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

bool Homography::maps_to_infinity(const ExactPoint& p) const {
    ExactScalar w = m_[6] * p.x + m_[7] * p.y + m_[8];
    return w.is_zero();
}

ExactPoint Homography::apply(const ExactPoint& p) const {
    ExactScalar w = m_[6] * p.x + m_[7] * p.y + m_[8];
    if (w.is_zero()) throw std::invalid_argument("Homography: point maps to infinity");
    ExactScalar u = m_[0] * p.x + m_[1] * p.y + m_[2];
    ExactScalar v = m_[3] * p.x + m_[4] * p.y + m_[5];
    return {u / w, v / w};
}

Homography collapse_line_to_infinity(const ExactScalar& a, const ExactScalar& b,
                                     const ExactScalar& c) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("collapse_line_to_infinity: degenerate line");
    ExactScalar zero(0), one(1);
    if (!c.is_zero()) {
        return Homography::from_matrix({one, zero, zero,  //
                                        zero, one, zero,  //
                                        a, b, c});
    }
    // line through the origin: same third row, sheared upper rows,
    // det = a^2 + b^2 != 0
    return Homography::from_matrix({one, zero, -a,  //
                                    zero, one, -b,  //
                                    a, b, zero});
}

std::array<ExactScalar, 3> line_through(const ExactPoint& p, const ExactPoint& q) {
    if (p == q) throw std::invalid_argument("line_through: identical points");
    return {p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y};
}

Ray::Ray(ExactPoint o, ExactPoint d) : origin(std::move(o)), direction(std::move(d)) {
    if (direction.x.is_zero() && direction.y.is_zero())
        throw std::invalid_argument("Ray: zero direction");
}

bool Ray::contains(const ExactPoint& p) const {
    ExactScalar rx = p.x - origin.x, ry = p.y - origin.y;
    if (!(rx * direction.y - ry * direction.x).is_zero()) return false;
    ExactScalar dot = rx * direction.x + ry * direction.y;
    return dot.sign() >= 0;
}

MidpointReductionReport verify_midpoint_reduction(const ExactPoint& A, const ExactPoint& B,
                                                  const ExactPoint& C, const ExactPoint& D,
                                                  const ExactPoint& E) {
    if (orientation(A, B, C) == 0)
        throw std::invalid_argument("verify_midpoint_reduction: A, B, C collinear");
    if (D == A || D == B || E == A || E == C)
        throw std::invalid_argument("verify_midpoint_reduction: D or E at a vertex");
    if (!on_segment(D, Segment(A, B)))
        throw std::invalid_argument("verify_midpoint_reduction: D not inside segment AB");
    if (!on_segment(E, Segment(A, C)))
        throw std::invalid_argument("verify_midpoint_reduction: E not inside segment AC");

    MidpointReductionReport rep;
    rep.f_point = line_intersection(B, E, C, D);
    rep.g = line_intersection(A, rep.f_point, D, E);
    rep.h = line_intersection(C, rep.g, E, rep.f_point);
    rep.i = line_intersection(B, rep.g, D, rep.f_point);

    auto bc = line_through(B, C);
    Homography proj = collapse_line_to_infinity(bc[0], bc[1], bc[2]);
    ExactPoint pa = proj.apply(A), pd = proj.apply(D), pe = proj.apply(E),
               pf = proj.apply(rep.f_point);
    rep.residual = {pf.x - (pd.x + pe.x - pa.x), pf.y - (pd.y + pe.y - pa.y)};
    rep.parallelogram = rep.residual.x.is_zero() && rep.residual.y.is_zero();

    ExactScalar two(2);
    ExactPoint pg = proj.apply(rep.g), ph = proj.apply(rep.h), pi = proj.apply(rep.i);
    bool g_mid = (two * pg.x == pd.x + pe.x) && (two * pg.y == pd.y + pe.y);
    bool h_mid = (two * ph.x == pe.x + pf.x) && (two * ph.y == pe.y + pf.y);
    bool i_mid = (two * pi.x == pd.x + pf.x) && (two * pi.y == pd.y + pf.y);
    rep.midpoints = g_mid && h_mid && i_mid;
    rep.pass = rep.parallelogram && rep.midpoints;
    return rep;
}

namespace {

// Singleton intersection of the closed segment [u, v] with a ray.
std::optional<ExactPoint> segment_ray_intersection(const ExactPoint& u, const ExactPoint& v,
                                                   const Ray& r) {
    ExactScalar sx = v.x - u.x, sy = v.y - u.y;
    ExactScalar den = sx * r.direction.y - sy * r.direction.x;
    if (den.is_zero()) {
        // parallel; a collinear ray would meet the segment in more than one
        // point unless it touches an endpoint, which the callers' geometry
        // never produces -- treat as no singleton
        if (r.contains(u) && !r.contains(v)) return u;
        if (r.contains(v) && !r.contains(u)) return v;
        return std::nullopt;
    }
    ExactScalar rx = r.origin.x - u.x, ry = r.origin.y - u.y;
    ExactScalar t = (rx * r.direction.y - ry * r.direction.x) / den;  // segment parameter
    ExactScalar s = (rx * sy - ry * sx) / den;                        // ray parameter
    if (t.sign() < 0 || t > ExactScalar(1) || s.sign() < 0) return std::nullopt;
    return ExactPoint{u.x + t * sx, u.y + t * sy};
}

}  // namespace

std::vector<ConvergenceStep> convergence_sequence(const ExactPoint& L, const ExactPoint& M,
                                                  const ExactPoint& N, const Ray& a,
                                                  const Ray& b, const ExactPoint& p0,
                                                  int max_iter) {
    if (max_iter <= 0) throw std::invalid_argument("convergence_sequence: max_iter must be > 0");
    if (!(a.origin == M) || !(b.origin == M))
        throw std::invalid_argument("convergence_sequence: rays must emanate from M");
    if (!a.contains(p0))
        throw std::invalid_argument("convergence_sequence: P0 must lie on ray a");

    std::vector<ConvergenceStep> out;
    out.reserve(static_cast<std::size_t>(max_iter));
    ExactPoint p = p0;
    ExactScalar last_p_dist = squared_distance(p, M);
    ExactScalar last_q_dist(-1);
    for (int i = 0; i < max_iter; ++i) {
        std::optional<ExactPoint> q = segment_ray_intersection(p, N, b);
        if (!q) throw ConvergenceError(i, "convergence_sequence: segment P_iN misses ray b");
        std::optional<ExactPoint> pn = segment_ray_intersection(*q, L, a);
        if (!pn) throw ConvergenceError(i, "convergence_sequence: segment Q_iL misses ray a");
        out.push_back({p, *q});

        ExactScalar qd = squared_distance(*q, M);
        ExactScalar pd = squared_distance(*pn, M);
        bool at_m = last_p_dist.is_zero();
        if (!at_m) {
            if (last_q_dist.sign() >= 0 && !(qd < last_q_dist))
                throw ConvergenceError(i, "convergence_sequence: Q distances not decreasing");
            if (!(pd < last_p_dist))
                throw ConvergenceError(i, "convergence_sequence: P distances not decreasing");
        }
        last_q_dist = qd;
        last_p_dist = pd;
        p = *pn;
    }
    return out;
}

VisibilityCone visibility_tangents(const ExactPoint& P, const ConvexPolygon& C) {
    if (C.tag() != RegionTag::polygon)
        throw std::invalid_argument("visibility_tangents: region must be a polygon");
    if (point_in_convex_polygon(P, C) != Containment::outside)
        throw std::invalid_argument("visibility_tangents: apex must be strictly outside");

    const auto& v = C.vertices();
    const std::size_t n = v.size();
    // edges strictly visible from P form one contiguous arc on a convex
    // polygon; its two end vertices are the tangent vertices
    std::vector<char> visible(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        visible[i] = orientation(v[i], v[(i + 1) % n], P) < 0 ? 1 : 0;

    std::size_t first = n;  // start of the visible arc
    for (std::size_t i = 0; i < n; ++i)
        if (visible[i] && !visible[(i + n - 1) % n]) { first = i; break; }
    if (first == n) throw std::logic_error("visibility_tangents: no visible edge");

    std::vector<ExactPoint> chain;
    chain.push_back(v[first]);
    std::size_t e = first;
    while (visible[e]) {
        chain.push_back(v[(e + 1) % n]);
        e = (e + 1) % n;
    }

    VisibilityCone cone;
    cone.apex = P;
    cone.tangent_vertices = {chain.front(), chain.back()};
    chain.push_back(P);
    cone.region = convex_hull(chain);
    return cone;
}

}  // namespace segcross
