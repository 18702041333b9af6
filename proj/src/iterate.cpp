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

#include "segcross/iterate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace segcross {

void IterationLimits::validate() const {
    if (max_depth <= 0 || max_total_points == 0 || max_coordinate_bits == 0)
        throw std::invalid_argument("IterationLimits: all limits must be positive");
}

const char* to_string(LimitKind k) {
    switch (k) {
        case LimitKind::none: return "none";
        case LimitKind::max_depth: return "max-depth";
        case LimitKind::max_total_points: return "max-total-points";
        case LimitKind::max_coordinate_bits: return "max-coordinate-bits";
    }
    return "?";
}

GenerationSet GenerationSet::from_start(std::span<const ExactPoint> start) {
    if (start.size() < 2)
        throw std::invalid_argument("GenerationSet: need at least 2 starting points");
    GenerationSet g;
    for (const ExactPoint& p : start) {
        if (!g.depth_.emplace(p, 0).second)
            throw std::invalid_argument("GenerationSet: duplicate starting point " + p.str());
    }
    return g;
}

int GenerationSet::depth_of(const ExactPoint& p) const {
    auto it = depth_.find(p);
    return it == depth_.end() ? -1 : it->second;
}

std::vector<ExactPoint> GenerationSet::points_up_to(int d) const {
    std::vector<ExactPoint> out;
    for (const auto& [p, dep] : depth_)
        if (dep <= d) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<ExactPoint, int>> GenerationSet::sorted_entries() const {
    std::vector<std::pair<ExactPoint, int>> out(depth_.begin(), depth_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::size_t GenerationSet::count_at_depth(int d) const {
    std::size_t n = 0;
    for (const auto& [p, dep] : depth_)
        if (dep == d) ++n;
    return n;
}

void GenerationSet::commit_round(const std::vector<ExactPoint>& pts) {
    if (pts.empty()) return;
    ++current_depth_;
    for (const ExactPoint& p : pts) {
        if (!depth_.emplace(p, current_depth_).second)
            throw std::logic_error("GenerationSet: committing an already known point");
    }
}

namespace {

// Homogeneous integer form (X/W, Y/W), W > 0. All hot-loop predicates run on
// gcd-free mpz arithmetic; rationals are reduced only when a genuinely new
// point is materialized.
struct Homo {
    mpz_class X, Y, W;
};

Homo to_homo(const ExactPoint& p) {
    Homo h;
    h.W = p.x.raw().get_den() * p.y.raw().get_den();
    h.X = p.x.raw().get_num() * p.y.raw().get_den();
    h.Y = p.y.raw().get_num() * p.x.raw().get_den();
    return h;
}

struct EngineSeg {
    int ia, ib;
    mpz_class lA, lB, lC;  // supporting line, cross product of the endpoints
    // outward-rounded float bounds; only ever used to skip provably
    // disjoint pairs, never to decide an intersection
    double xlo, xhi, ylo, yhi;
};

double lo_bound(double a, double b) { return std::nextafter(std::min(a, b), -INFINITY); }
double hi_bound(double a, double b) { return std::nextafter(std::max(a, b), INFINITY); }

struct Scratch {
    mpz_class acc, t;
};

int side_of_line(const EngineSeg& s, const Homo& h, Scratch& sc) {
    mpz_mul(sc.acc.get_mpz_t(), s.lA.get_mpz_t(), h.X.get_mpz_t());
    mpz_addmul(sc.acc.get_mpz_t(), s.lB.get_mpz_t(), h.Y.get_mpz_t());
    mpz_addmul(sc.acc.get_mpz_t(), s.lC.get_mpz_t(), h.W.get_mpz_t());
    return mpz_sgn(sc.acc.get_mpz_t());
}

class Engine {
public:
    explicit Engine(std::span<const ExactPoint> start) {
        for (const ExactPoint& p : start) add_point(p, 0);
    }

    std::size_t point_count() const { return pts_.size(); }
    const std::vector<ExactPoint>& points() const { return pts_; }
    const std::vector<int>& depths() const { return depths_; }

    void add_point(const ExactPoint& p, int depth) {
        homo_.push_back(to_homo(p));
        pts_.push_back(p);
        depths_.push_back(depth);
        known_.insert(p);
    }

    // Creates segments from every point index in [from, point_count) to all
    // lower indices. With from == 0 this is the full quadratic segment set.
    void extend_segments(std::size_t from) {
        first_fresh_seg_ = segs_.size();
        for (std::size_t k = std::max<std::size_t>(from, 1); k < pts_.size(); ++k)
            for (std::size_t m = 0; m < k; ++m) segs_.push_back(make_seg(m, k));
    }

    struct RoundOutcome {
        std::vector<ExactPoint> new_points;  // sorted
        bool bits_exceeded = false;
        bool count_exceeded = false;
    };

    // Tests every pair {fresh segment, any earlier segment}; with the full
    // segment set fresh this is the naive all-pairs pass. Stops early when a
    // budget is provably crossed (the predicate is enumeration-order
    // independent, and the caller discards the partial round).
    RoundOutcome run_round(std::size_t max_bits, std::size_t point_budget) {
        RoundOutcome out;
        std::unordered_set<ExactPoint> found;
        Scratch sc;
        for (std::size_t j = first_fresh_seg_; j < segs_.size(); ++j) {
            const EngineSeg& t = segs_[j];
            for (std::size_t i = 0; i < j; ++i) {
                const EngineSeg& s = segs_[i];
                if (s.ia == t.ia || s.ia == t.ib || s.ib == t.ia || s.ib == t.ib)
                    continue;  // any singleton meet is the shared point itself
                if (s.xhi < t.xlo || t.xhi < s.xlo || s.yhi < t.ylo || t.yhi < s.ylo)
                    continue;
                int o1 = side_of_line(s, homo_[static_cast<std::size_t>(t.ia)], sc);
                int o2 = side_of_line(s, homo_[static_cast<std::size_t>(t.ib)], sc);
                if (o1 * o2 > 0) continue;
                if (o1 == 0 && o2 == 0) continue;  // collinear: touch points are endpoints
                int o3 = side_of_line(t, homo_[static_cast<std::size_t>(s.ia)], sc);
                int o4 = side_of_line(t, homo_[static_cast<std::size_t>(s.ib)], sc);
                if (o3 * o4 > 0) continue;

                ExactPoint x = crossing(s, t, sc);
                if (known_.count(x) != 0 || !found.insert(x).second) continue;
                if (x.x.bit_length() > max_bits || x.y.bit_length() > max_bits) {
                    out.bits_exceeded = true;
                    return out;
                }
                if (known_.size() + found.size() > point_budget) {
                    out.count_exceeded = true;
                    return out;
                }
            }
        }
        out.new_points.assign(found.begin(), found.end());
        std::sort(out.new_points.begin(), out.new_points.end());
        return out;
    }

private:
    EngineSeg make_seg(std::size_t m, std::size_t k) {
        EngineSeg s;
        s.ia = static_cast<int>(m);
        s.ib = static_cast<int>(k);
        const Homo& a = homo_[m];
        const Homo& b = homo_[k];
        s.lA = a.Y * b.W - b.Y * a.W;
        s.lB = b.X * a.W - a.X * b.W;
        s.lC = a.X * b.Y - b.X * a.Y;
        double ax = pts_[m].x.to_double(), ay = pts_[m].y.to_double();
        double bx = pts_[k].x.to_double(), by = pts_[k].y.to_double();
        s.xlo = lo_bound(ax, bx);
        s.xhi = hi_bound(ax, bx);
        s.ylo = lo_bound(ay, by);
        s.yhi = hi_bound(ay, by);
        return s;
    }

    ExactPoint crossing(const EngineSeg& s, const EngineSeg& t, Scratch& sc) {
        mpz_class X = s.lB * t.lC - t.lB * s.lC;
        mpz_class Y = s.lC * t.lA - t.lC * s.lA;
        mpz_class W = s.lA * t.lB - t.lA * s.lB;
        (void)sc;
        if (mpz_sgn(W.get_mpz_t()) < 0) {
            X = -X;
            Y = -Y;
            W = -W;
        }
        mpq_class qx(X, W), qy(Y, W);
        qx.canonicalize();
        qy.canonicalize();
        return {ExactScalar(qx), ExactScalar(qy)};
    }

    std::vector<ExactPoint> pts_;
    std::vector<Homo> homo_;
    std::vector<int> depths_;
    std::unordered_set<ExactPoint> known_;
    std::vector<EngineSeg> segs_;
    std::size_t first_fresh_seg_ = 0;
};

}  // namespace

std::vector<ExactPoint> next_generation(const GenerationSet& g) {
    if (g.size() < 2) throw std::invalid_argument("next_generation: need at least 2 points");
    std::vector<ExactPoint> pts = g.points_up_to(g.current_depth());
    Engine engine(pts);
    engine.extend_segments(0);
    auto outcome = engine.run_round(std::numeric_limits<std::size_t>::max(),
                                    std::numeric_limits<std::size_t>::max());
    return outcome.new_points;
}

std::pair<GenerationSet, IterationReport> iterate(std::span<const ExactPoint> start,
                                                  const IterationLimits& limits) {
    limits.validate();
    GenerationSet gen = GenerationSet::from_start(start);
    IterationReport report;

    std::vector<ExactPoint> sorted_start(start.begin(), start.end());
    std::sort(sorted_start.begin(), sorted_start.end());
    Engine engine(sorted_start);

    if (engine.point_count() >= limits.max_total_points) {
        report.limit = LimitKind::max_total_points;
        return {std::move(gen), std::move(report)};
    }

    std::size_t fresh_from = 0;
    while (true) {
        engine.extend_segments(fresh_from);
        auto t0 = std::chrono::steady_clock::now();
        auto outcome = engine.run_round(limits.max_coordinate_bits, limits.max_total_points);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        if (outcome.bits_exceeded) {
            report.limit = LimitKind::max_coordinate_bits;
            break;
        }
        if (outcome.count_exceeded) {
            report.limit = LimitKind::max_total_points;
            break;
        }
        report.rounds.push_back(
            {gen.current_depth() + 1, outcome.new_points.size(), ms});
        if (outcome.new_points.empty()) {
            report.fixpoint = true;
            break;
        }
        gen.commit_round(outcome.new_points);
        fresh_from = engine.point_count();
        for (const ExactPoint& p : outcome.new_points)
            engine.add_point(p, gen.current_depth());

        if (gen.current_depth() >= limits.max_depth) {
            report.limit = LimitKind::max_depth;
            break;
        }
        if (gen.size() >= limits.max_total_points) {
            report.limit = LimitKind::max_total_points;
            break;
        }
    }
    return {std::move(gen), std::move(report)};
}

}  // namespace segcross
