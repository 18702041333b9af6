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

#include <array>
#include <stdexcept>
#include <vector>

#include "segcross/polygon.hpp"

namespace segcross {

/// Exact plane projective transformation, row-major 3x3 with nonzero
/// determinant, acting on [x : y : 1].
class Homography {
public:
    /// Throws std::invalid_argument when the matrix is singular.
    static Homography from_matrix(std::array<ExactScalar, 9> row_major);

    const std::array<ExactScalar, 9>& matrix() const { return m_; }
    ExactScalar det() const;

    /// True when p lies on the preimage of the line at infinity.
    bool maps_to_infinity(const ExactPoint& p) const;

    /// Affine action. Throws std::invalid_argument when p maps to infinity.
    ExactPoint apply(const ExactPoint& p) const;

private:
    std::array<ExactScalar, 9> m_;
};

/// The homography sending the line ax + by + c = 0 to the line at infinity:
/// third row = (a, b, c), identity elsewhere, so [x:y:1] -> [x : y : ax+by+c].
/// When c == 0 that matrix would be singular; the first rows then become
/// (1,0,-a), (0,1,-b), keeping the same third row and a nonzero determinant.
/// Throws std::invalid_argument when (a, b) == (0, 0).
Homography collapse_line_to_infinity(const ExactScalar& a, const ExactScalar& b,
                                     const ExactScalar& c);

/// Line coefficients (a, b, c) of the line through two distinct points.
std::array<ExactScalar, 3> line_through(const ExactPoint& p, const ExactPoint& q);

struct Ray {
    ExactPoint origin;
    ExactPoint direction;  // nonzero vector

    Ray(ExactPoint o, ExactPoint d);

    /// Exact membership with parameter >= 0.
    bool contains(const ExactPoint& p) const;
};

/// Report of the projective reduction of a cevian configuration: A, B, C a
/// triangle, D inside AB, E inside AC, F = BE x CD. Collapsing line BC must
/// turn A'D'F'E' into a parallelogram, which forces G = AF x DE, H = CG x EF,
/// I = BG x DF onto the projected midpoints.
struct MidpointReductionReport {
    ExactPoint f_point;           // F = BE x CD
    ExactPoint g, h, i;           // derived crossings
    ExactPoint residual;          // image(F) - (image(D) + image(E) - image(A))
    bool parallelogram = false;   // residual == (0, 0)
    bool midpoints = false;       // G', H', I' are the projected edge midpoints
    bool pass = false;
};

/// Throws std::invalid_argument when A, B, C are collinear, or D/E sit at a
/// vertex or off their segment.
MidpointReductionReport verify_midpoint_reduction(const ExactPoint& A, const ExactPoint& B,
                                                  const ExactPoint& C, const ExactPoint& D,
                                                  const ExactPoint& E);

struct ConvergenceStep {
    ExactPoint p, q;
};

/// Raised when a step of the convergence iteration has no singleton
/// intersection on the target ray; carries the failing index.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(int index, const std::string& what)
        : std::runtime_error(what), index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

/// The two-ray contraction: Q_i = segment(P_i, N) x ray b, P_{i+1} =
/// segment(Q_i, L) x ray a, run max_iter times from P0 on ray a. Both rays
/// must emanate from M. The exact squared distances to M strictly decrease
/// (the all-at-M constant sequence excepted).
std::vector<ConvergenceStep> convergence_sequence(const ExactPoint& L, const ExactPoint& M,
                                                  const ExactPoint& N, const Ray& a,
                                                  const Ray& b, const ExactPoint& p0,
                                                  int max_iter);

struct VisibilityCone {
    ExactPoint apex;
    std::pair<ExactPoint, ExactPoint> tangent_vertices;
    /// Closure of ch({apex} u C) minus C: the hull of the apex and the
    /// boundary chain facing it.
    ConvexPolygon region;
};

/// Tangent vertices of a convex polygon as seen from an exterior point,
/// with the cone they bound. Throws std::invalid_argument when P is not
/// strictly outside or C is not a polygon.
VisibilityCone visibility_tangents(const ExactPoint& P, const ConvexPolygon& C);

}  // namespace segcross
