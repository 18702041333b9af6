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

#include "segcross/svg.hpp"

#include <sstream>
#include <stdexcept>

namespace segcross {

namespace {

constexpr int kDecimals = 4;
constexpr const char* kDepthColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                        "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct Frame {
    ExactScalar ymin_plus_ymax;  // for the y flip within the box
    ExactScalar point_r;
    ExactScalar stroke;

    std::string fx(const ExactScalar& v) const { return v.decimal(kDecimals); }
    std::string fy(const ExactScalar& v) const { return (ymin_plus_ymax - v).decimal(kDecimals); }
};

}  // namespace

std::string render_svg(const GenerationSet& g, const RegionResult& region,
                       const SvgOptions& options) {
    if (g.size() == 0) throw std::invalid_argument("render_svg: empty generation set");

    auto entries = g.sorted_entries();
    std::vector<ExactPoint> starts;
    for (const auto& [p, d] : entries)
        if (d == 0) starts.push_back(p);
    if (starts.empty()) throw std::invalid_argument("render_svg: no starting points");

    ExactScalar xmin = starts[0].x, xmax = xmin, ymin = starts[0].y, ymax = ymin;
    for (const ExactPoint& p : starts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    ExactScalar w = xmax - xmin, h = ymax - ymin;
    ExactScalar fallback(1);
    if (w.is_zero()) w = fallback;
    if (h.is_zero()) h = fallback;
    ExactScalar pad_x = w / ExactScalar(20), pad_y = h / ExactScalar(20);  // 5% padding
    ExactScalar bx = xmin - pad_x, by = ymin - pad_y;
    ExactScalar bw = w + ExactScalar(2) * pad_x, bh = h + ExactScalar(2) * pad_y;

    Frame fr{ymin + ymax, bw / ExactScalar(120), bw / ExactScalar(400)};

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << bx.decimal(kDecimals) << " " << (fr.ymin_plus_ymax - by - bh).decimal(kDecimals) << " "
        << bw.decimal(kDecimals) << " " << bh.decimal(kDecimals) << "\">\n";

    if (!options.hide_segments) {
        std::vector<ExactPoint> all;
        for (const auto& [p, d] : entries) all.push_back(p);
        svg << "  <g stroke=\"#c0c0c0\" stroke-width=\"" << fr.stroke.decimal(kDecimals)
            << "\" fill=\"none\">\n";
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                svg << "    <line x1=\"" << fr.fx(all[i].x) << "\" y1=\"" << fr.fy(all[i].y)
                    << "\" x2=\"" << fr.fx(all[j].x) << "\" y2=\"" << fr.fy(all[j].y) << "\"/>\n";
        svg << "  </g>\n";
    }

    const ConvexPolygon& k = region.region;
    if (k.tag() == RegionTag::polygon) {
        svg << "  <polygon fill=\"none\" stroke=\"#000000\" stroke-width=\""
            << (fr.stroke * ExactScalar(3)).decimal(kDecimals) << "\" points=\"";
        bool first = true;
        for (const ExactPoint& v : k.vertices()) {
            if (!first) svg << " ";
            svg << fr.fx(v.x) << "," << fr.fy(v.y);
            first = false;
        }
        svg << "\"/>\n";
    } else if (k.tag() == RegionTag::segment) {
        svg << "  <line stroke=\"#000000\" stroke-width=\""
            << (fr.stroke * ExactScalar(3)).decimal(kDecimals) << "\" x1=\""
            << fr.fx(k.vertices()[0].x) << "\" y1=\"" << fr.fy(k.vertices()[0].y) << "\" x2=\""
            << fr.fx(k.vertices()[1].x) << "\" y2=\"" << fr.fy(k.vertices()[1].y) << "\"/>\n";
    } else if (k.tag() == RegionTag::point) {
        svg << "  <circle fill=\"none\" stroke=\"#000000\" stroke-width=\""
            << (fr.stroke * ExactScalar(3)).decimal(kDecimals) << "\" cx=\""
            << fr.fx(k.vertices()[0].x) << "\" cy=\"" << fr.fy(k.vertices()[0].y) << "\" r=\""
            << (fr.point_r * ExactScalar(2)).decimal(kDecimals) << "\"/>\n";
    }

    for (const auto& [p, d] : entries) {
        const char* color = kDepthColors[static_cast<std::size_t>(d) %
                                         (sizeof(kDepthColors) / sizeof(kDepthColors[0]))];
        ExactScalar r = d == 0 ? fr.point_r * ExactScalar(3, 2) : fr.point_r;
        svg << "  <circle fill=\"" << color << "\" cx=\"" << fr.fx(p.x) << "\" cy=\""
            << fr.fy(p.y) << "\" r=\"" << r.decimal(kDecimals) << "\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace segcross
