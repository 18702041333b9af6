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

#include <string>

#include "segcross/candidate.hpp"
#include "segcross/iterate.hpp"

namespace segcross {

struct SvgOptions {
    /// Omit the segment paths between current points.
    bool hide_segments = false;
};

/// Static SVG 1.1 figure: starting points, generated points styled by depth,
/// optionally all segments between current points, and the candidate region
/// outline. The view box is the bounding box of the starting hull padded 5%.
/// Output is deterministic byte-for-byte. Throws std::invalid_argument on an
/// empty generation set.
std::string render_svg(const GenerationSet& g, const RegionResult& region,
                       const SvgOptions& options);

}  // namespace segcross
