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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "segcross/candidate.hpp"
#include "segcross/classify.hpp"
#include "segcross/density.hpp"
#include "segcross/fractions.hpp"
#include "segcross/pointfile.hpp"
#include "segcross/projective.hpp"
#include "segcross/svg.hpp"

using nlohmann::json;
using namespace segcross;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInternal = 4;
constexpr const char* kSchema = "segcross-report/1";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PointFileError(-1, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PointFileError(-1, "cannot write file: " + path);
    out << content;
}

std::vector<ExactPoint> load_points(const std::string& path) {
    return parse_point_file(read_file(path));
}

json point_json(const ExactPoint& p) { return json::array({p.x.str(), p.y.str()}); }

json point_dec_json(const ExactPoint& p) {
    return json::array({p.x.to_double(), p.y.to_double()});
}

json report_envelope(const std::string& command) {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

json rounds_json(const IterationReport& rep) {
    json rounds = json::array();
    for (const RoundStats& r : rep.rounds)
        rounds.push_back({{"depth", r.depth}, {"new_points", r.new_points}, {"wall_ms", r.wall_ms}});
    return rounds;
}

json limits_json(const IterationLimits& l) {
    return {{"max_depth", l.max_depth},
            {"max_total_points", l.max_total_points},
            {"max_coordinate_bits", l.max_coordinate_bits}};
}

json region_json(const ConvexPolygon& c) {
    json j;
    j["tag"] = to_string(c.tag());
    json verts = json::array(), decs = json::array();
    for (const ExactPoint& v : c.vertices()) {
        verts.push_back(point_json(v));
        decs.push_back(point_dec_json(v));
    }
    j["vertices"] = std::move(verts);
    j["vertices_dec"] = std::move(decs);
    return j;
}

json witness_json(const ConfigClass& cls) {
    json j;
    std::visit(
        [&](const auto& w) {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, WitnessI>) {
                j["line"] = json::array({point_json(w.line.p), point_json(w.line.q)});
            } else if constexpr (std::is_same_v<T, WitnessII>) {
                j["line"] = json::array({point_json(w.line.p), point_json(w.line.q)});
                j["off"] = point_json(w.off);
            } else if constexpr (std::is_same_v<T, WitnessIII>) {
                j["line"] = json::array({point_json(w.line.p), point_json(w.line.q)});
                j["off"] = json::array({point_json(w.off_a), point_json(w.off_b)});
            } else if constexpr (std::is_same_v<T, WitnessIV>) {
                j["outer"] = json::array(
                    {point_json(w.outer[0]), point_json(w.outer[1]), point_json(w.outer[2])});
                j["inner"] = json::array(
                    {point_json(w.inner[0]), point_json(w.inner[1]), point_json(w.inner[2])});
                json pairing = json::array();
                for (const CollinearTriple& t : w.pairing)
                    pairing.push_back({{"inner", json::array({point_json(t.inner_a),
                                                              point_json(t.inner_b)})},
                                       {"outer", point_json(t.outer)}});
                j["pairing"] = std::move(pairing);
            } else if constexpr (std::is_same_v<T, ProbeWitness>) {
                j["probe"] = {{"fixpoint", w.fixpoint},
                              {"total_points", w.total_points},
                              {"rounds", rounds_json(w.report)},
                              {"limits", limits_json(w.limits_used)}};
            }
        },
        cls.witness);
    return j;
}

std::string points_csv(const GenerationSet& g) {
    std::ostringstream csv;
    csv << "x,y,depth\n";
    for (const auto& [p, d] : g.sorted_entries())
        csv << p.x.str() << "," << p.y.str() << "," << d << "\n";
    return csv.str();
}

RegionResult region_or_empty(std::span<const ExactPoint> pts) {
    if (pts.size() >= 3) return candidate(pts);
    return RegionResult{};
}

struct CommonArgs {
    std::string file;
    IterationLimits limits;
    std::string out_csv;
    std::string out_svg;
    bool hide_segments = false;
};

void add_limit_options(CLI::App* cmd, IterationLimits& limits) {
    cmd->add_option("--depth", limits.max_depth, "maximum discovery depth");
    cmd->add_option("--max-points", limits.max_total_points, "maximum total points");
    cmd->add_option("--max-bits", limits.max_coordinate_bits,
                    "maximum coordinate numerator/denominator bit length");
}

int run_classify(const std::string& file, const IterationLimits& probe) {
    auto pts = load_points(file);
    ConfigClass cls = classify(pts, probe);
    json j = report_envelope("classify");
    j["kind"] = to_string(cls.kind);
    j["witness"] = witness_json(cls);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int run_iterate(const CommonArgs& args) {
    auto pts = load_points(args.file);
    auto [gen, rep] = iterate(pts, args.limits);
    json j = report_envelope("iterate");
    j["total_points"] = gen.size();
    j["reached_depth"] = gen.current_depth();
    j["fixpoint"] = rep.fixpoint;
    j["limit"] = to_string(rep.limit);
    j["rounds"] = rounds_json(rep);
    j["limits"] = limits_json(args.limits);
    if (!args.out_csv.empty()) write_file(args.out_csv, points_csv(gen));
    if (!args.out_svg.empty())
        write_file(args.out_svg, render_svg(gen, region_or_empty(pts), {args.hide_segments}));
    std::cout << j.dump(2) << "\n";
    return (rep.limit != LimitKind::none && !rep.fixpoint) ? kExitLimit : kExitOk;
}

int run_candidate(const std::string& file, int check_depth) {
    auto pts = load_points(file);
    RegionResult rr = candidate(pts);
    json j = report_envelope("candidate");
    j["region"] = region_json(rr.region);
    j["supporting_hulls"] = rr.supporting_hulls.size();
    if (check_depth > 0) {
        IterationLimits lim;
        lim.max_depth = check_depth;
        auto [gen, rep] = iterate(pts, lim);
        CandidateCheckReport chk = check_candidate_properties(pts, gen);
        json cj;
        cj["pass"] = chk.pass;
        cj["lemma_violation"] = chk.lemma_violation;
        cj["generated_checked"] = chk.generated_checked;
        json vc = json::array();
        for (const auto& v : chk.vertex_checks)
            vc.push_back({{"vertex", point_json(v.vertex)}, {"matched", v.matched},
                          {"depth", v.depth}});
        cj["vertices"] = std::move(vc);
        json cf = json::array();
        for (const auto& f : chk.containment_failures)
            cf.push_back({{"point", point_json(f.point)}, {"depth", f.depth}});
        cj["containment_failures"] = std::move(cf);
        j["check"] = std::move(cj);
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int run_density(const CommonArgs& args, int grid_n) {
    auto pts = load_points(args.file);
    ConfigClass cls = classify(pts);
    if (cls.kind != ConfigKind::non_exceptional)
        throw std::invalid_argument("density: exceptional configuration (kind " +
                                    std::string(to_string(cls.kind)) + "); run classify");
    RegionResult rr = candidate(pts);
    if (rr.region.tag() != RegionTag::polygon)
        throw std::invalid_argument("density: degenerate candidate region");
    auto [gen, rep] = iterate(pts, args.limits);

    json j = report_envelope("density");
    j["grid"] = grid_n;
    j["fixpoint"] = rep.fixpoint;
    j["limit"] = to_string(rep.limit);
    j["total_points"] = gen.size();
    json profile = json::array();
    for (int d = 1; d <= gen.current_depth(); ++d) {
        auto cov_pts = gen.points_up_to(d);
        CoverageReport cov = coverage_radius(cov_pts, rr.region, grid_n);
        cov.depth = d;
        profile.push_back({{"depth", cov.depth},
                           {"samples_in_region", cov.samples_in_region},
                           {"radius_sq", cov.radius_sq.str()},
                           {"radius_sq_dec", cov.radius_sq.to_double()},
                           {"worst_sample", point_json(cov.worst_sample)},
                           {"worst_sample_dec", point_dec_json(cov.worst_sample)}});
    }
    j["profile"] = std::move(profile);
    if (!args.out_csv.empty()) write_file(args.out_csv, points_csv(gen));
    std::cout << j.dump(2) << "\n";
    return (rep.limit != LimitKind::none && !rep.fixpoint) ? kExitLimit : kExitOk;
}

int run_fractions(std::uint64_t max_den, bool traces) {
    ClosureResult res = closure(max_den);
    json j = report_envelope("fractions");
    j["max_denominator"] = max_den;
    j["count"] = res.fractions().size();
    json fr = json::array();
    for (const Fraction& f : res.fractions()) fr.push_back(f.str());
    j["fractions"] = std::move(fr);
    if (traces) {
        json tr = json::array();
        for (const Fraction& f : res.fractions()) {
            DerivationTrace t = res.trace_of(f);
            json steps = json::array();
            for (const DerivationStep& s : t.steps)
                steps.push_back({{"rule", to_string(s.rule)}, {"input", s.input.str()}});
            tr.push_back({{"target", t.target.str()}, {"steps", std::move(steps)}});
        }
        j["traces"] = std::move(tr);
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int run_converge(const std::string& file, int iters) {
    auto pts = load_points(file);
    if (pts.size() != 6)
        throw std::invalid_argument(
            "converge: point file must contain exactly 6 points: L, M, N, a-direction point, "
            "b-direction point, P0");
    const ExactPoint &L = pts[0], &M = pts[1], &N = pts[2];
    Ray a(M, {pts[3].x - M.x, pts[3].y - M.y});
    Ray b(M, {pts[4].x - M.x, pts[4].y - M.y});
    auto steps = convergence_sequence(L, M, N, a, b, pts[5], iters);

    json j = report_envelope("converge");
    j["iterations"] = iters;
    json sj = json::array();
    for (const auto& s : steps)
        sj.push_back({{"p", point_json(s.p)},
                      {"q", point_json(s.q)},
                      {"p_dec", point_dec_json(s.p)},
                      {"q_dec", point_dec_json(s.q)}});
    j["steps"] = std::move(sj);

    // the projected sequence must have exactly equal consecutive spacing
    auto ln = line_through(L, N);
    Homography proj = collapse_line_to_infinity(ln[0], ln[1], ln[2]);
    bool equal_spacing = true;
    bool projectable = true;
    for (const auto& s : steps)
        projectable = projectable && !proj.maps_to_infinity(s.p);
    if (projectable && steps.size() >= 3) {
        ExactScalar spacing = squared_distance(proj.apply(steps[0].p), proj.apply(steps[1].p));
        for (std::size_t i = 1; i + 1 < steps.size(); ++i) {
            ExactScalar d = squared_distance(proj.apply(steps[i].p), proj.apply(steps[i + 1].p));
            equal_spacing = equal_spacing && d == spacing;
        }
    }
    j["projected_spacing_equal"] = projectable && equal_spacing;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int run_render(const CommonArgs& args) {
    auto pts = load_points(args.file);
    auto [gen, rep] = iterate(pts, args.limits);
    std::string svg = render_svg(gen, region_or_empty(pts), {args.hide_segments});
    write_file(args.out_svg, svg);
    json j = report_envelope("render");
    j["svg"] = args.out_svg;
    j["total_points"] = gen.size();
    j["reached_depth"] = gen.current_depth();
    j["fixpoint"] = rep.fixpoint;
    j["limit"] = to_string(rep.limit);
    std::cout << j.dump(2) << "\n";
    return (rep.limit != LimitKind::none && !rep.fixpoint) ? kExitLimit : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact iterated segment-intersection toolkit"};
    app.require_subcommand(1);

    CommonArgs args;
    IterationLimits probe = kDefaultProbeLimits;
    int grid_n = 20;
    int check_depth = 2;
    int iters = 10;
    std::uint64_t max_den = 10;
    bool traces = false;

    auto* c_classify = app.add_subcommand("classify", "classify a starting configuration");
    c_classify->add_option("file", args.file, "point file")->required();
    c_classify->add_option("--probe-depth", probe.max_depth, "probe depth limit");
    c_classify->add_option("--probe-points", probe.max_total_points, "probe point limit");
    c_classify->add_option("--probe-bits", probe.max_coordinate_bits, "probe bits limit");

    auto* c_iterate = app.add_subcommand("iterate", "run the intersection iteration");
    c_iterate->add_option("file", args.file, "point file")->required();
    add_limit_options(c_iterate, args.limits);
    c_iterate->add_option("--out", args.out_csv, "write point dump CSV");
    c_iterate->add_option("--svg", args.out_svg, "write SVG figure");
    c_iterate->add_flag("--hide-segments", args.hide_segments, "omit segment paths in SVG");

    auto* c_candidate = app.add_subcommand("candidate", "compute the candidate region");
    c_candidate->add_option("file", args.file, "point file")->required();
    c_candidate->add_option("--check-depth", check_depth,
                            "verify region properties against an iteration of this depth "
                            "(0 disables)");

    auto* c_density = app.add_subcommand("density", "coverage profile of the candidate region");
    c_density->add_option("file", args.file, "point file")->required();
    add_limit_options(c_density, args.limits);
    c_density->add_option("--grid", grid_n, "grid resolution");
    c_density->add_option("--out", args.out_csv, "write point dump CSV");

    auto* c_fractions = app.add_subcommand("fractions", "constructible fraction closure");
    c_fractions->add_option("--max-den", max_den, "denominator bound")->required();
    c_fractions->add_flag("--traces", traces, "include derivation traces");

    auto* c_converge = app.add_subcommand("converge", "two-ray convergence sequence");
    c_converge->add_option("file", args.file, "point file: L, M, N, a-dir, b-dir, P0")->required();
    c_converge->add_option("--iters", iters, "iterations");

    auto* c_render = app.add_subcommand("render", "run the iteration and render an SVG");
    c_render->add_option("file", args.file, "point file")->required();
    add_limit_options(c_render, args.limits);
    c_render->add_option("--svg", args.out_svg, "output SVG path")->required();
    c_render->add_flag("--hide-segments", args.hide_segments, "omit segment paths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (c_classify->parsed()) return run_classify(args.file, probe);
        if (c_iterate->parsed()) return run_iterate(args);
        if (c_candidate->parsed()) return run_candidate(args.file, check_depth);
        if (c_density->parsed()) return run_density(args, grid_n);
        if (c_fractions->parsed()) return run_fractions(max_den, traces);
        if (c_converge->parsed()) return run_converge(args.file, iters);
        if (c_render->parsed()) return run_render(args);
    } catch (const PointFileError& e) {
        std::cerr << "input error";
        if (e.entry() >= 0) std::cerr << " (entry " << e.entry() << ")";
        std::cerr << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const ConvergenceError& e) {
        std::cerr << "input error (step " << e.index() << "): " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
