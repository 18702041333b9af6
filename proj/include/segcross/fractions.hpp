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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segcross/point.hpp"

namespace segcross {

/// Reduced fraction k/l in [0, 1]: gcd(k, l) == 1, l >= 1.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    /// Reduces and validates k/l <= 1; throws std::invalid_argument otherwise.
    static Fraction of(std::uint64_t k, std::uint64_t l);

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
        // cross multiplication is safe for the denominators this module sees
        return (unsigned __int128)a.num * b.den <=> (unsigned __int128)b.num * a.den;
    }

    std::string str() const;
};

/// k/l -> (l-k)/l
Fraction mirror(const Fraction& f);
/// k/l -> k/(k+l)
Fraction step(const Fraction& f);

enum class Rule { mirror, step };

const char* to_string(Rule r);

struct DerivationStep {
    Rule rule;
    Fraction input;
};

/// Derivation chain from the base set {0/1, 1/1}: steps[0].input is a base
/// fraction and each later input is the previous step's output.
struct DerivationTrace {
    Fraction target;
    std::vector<DerivationStep> steps;
};

/// Replays the trace and checks it reproduces its target.
bool replay(const DerivationTrace& t);

class ClosureResult {
public:
    /// Sorted ascending.
    const std::vector<Fraction>& fractions() const { return sorted_; }
    bool contains(const Fraction& f) const { return parent_.count(f) != 0; }
    /// First derivation found (breadth-first order). Throws when absent.
    DerivationTrace trace_of(const Fraction& f) const;

    friend ClosureResult closure(std::uint64_t max_denominator);

private:
    std::vector<Fraction> sorted_;
    std::map<Fraction, std::optional<DerivationStep>> parent_;  // nullopt = base
};

/// Closure of {0/1, 1/1} under mirror and step, restricted to denominators
/// <= max_denominator. Equals the Farey sequence of that order.
ClosureResult closure(std::uint64_t max_denominator);

/// Non-collinear triangle with the midpoints of its sides; carries the
/// boundary triangle D, E, F that the restricted process lives on.
struct MidpointConfig {
    ExactPoint A, B, C;  // outer triangle
    ExactPoint D, E, F;  // midpoints of AB, BC, AC

    /// Computes the midpoints exactly; throws when A, B, C are collinear.
    static MidpointConfig from_triangle(ExactPoint A, ExactPoint B, ExactPoint C);
};

/// The point H on segment (edge_from, edge_to) with
/// |edge_to H| / |edge_from edge_to| == f, i.e. H = edge_to + f*(edge_from -
/// edge_to). Throws when the endpoints coincide.
ExactPoint fraction_to_edge_point(const ExactPoint& edge_from, const ExactPoint& edge_to,
                                  const Fraction& f);

/// Ratios discovered on one boundary edge with first-appearance depths.
/// Ratios are measured from the edge's first named endpoint.
struct EdgeRatios {
    std::map<Fraction, int> first_depth;
};

struct RestrictedIterationResult {
    /// Edges in the order DE, EF, DF.
    std::array<EdgeRatios, 3> edges;
    int depth = 0;

    /// Ratio set realized on an edge at a given depth.
    std::vector<Fraction> at_depth(int edge, int d) const;
};

/// Simulates the restricted process: segments from boundary points to the
/// outer vertices A, B, C, intersected with the boundary triangle. Depth 0 is
/// {D, E, F} itself (ratios 0 and 1 on every edge). Throws when depth <= 0.
RestrictedIterationResult restricted_iteration(const MidpointConfig& cfg, int depth);

}  // namespace segcross
