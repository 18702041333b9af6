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

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "segcross/point.hpp"

namespace segcross {

/// Parse or validation failure with the offending entry index (-1 when the
/// document itself is malformed).
class PointFileError : public std::runtime_error {
public:
    PointFileError(int entry, const std::string& what)
        : std::runtime_error(what), entry_(entry) {}
    int entry() const { return entry_; }

private:
    int entry_;
};

/// Reads {"points": [[x, y], ...]} where each coordinate is a JSON integer
/// or a string "p" / "p/q". Rejects zero denominators, malformed rationals
/// and duplicate points, each with the entry position.
std::vector<ExactPoint> parse_point_file(std::string_view text);

/// Canonical document accepted by parse_point_file; exact round trip.
std::string serialize_point_file(std::span<const ExactPoint> points);

}  // namespace segcross
