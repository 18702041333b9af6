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

#include "segcross/pointfile.hpp"

#include <unordered_set>

#include <json.hpp>

namespace segcross {

namespace {

ExactScalar parse_coordinate(const nlohmann::json& j, int entry) {
    try {
        if (j.is_number_integer()) return ExactScalar(static_cast<long>(j.get<long long>()));
        if (j.is_string()) return ExactScalar::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw PointFileError(entry, e.what());
    }
    throw PointFileError(entry, "coordinate must be an integer or a \"p/q\" string");
}

}  // namespace

std::vector<ExactPoint> parse_point_file(std::string_view text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw PointFileError(-1, "not valid JSON");
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
        throw PointFileError(-1, "expected an object with a \"points\" array");

    std::vector<ExactPoint> out;
    std::unordered_set<ExactPoint> seen;
    int entry = 0;
    for (const auto& item : doc["points"]) {
        if (!item.is_array() || item.size() != 2)
            throw PointFileError(entry, "each point must be a [x, y] pair");
        ExactPoint p{parse_coordinate(item[0], entry), parse_coordinate(item[1], entry)};
        if (!seen.insert(p).second)
            throw PointFileError(entry, "duplicate point " + p.str());
        out.push_back(std::move(p));
        ++entry;
    }
    return out;
}

std::string serialize_point_file(std::span<const ExactPoint> points) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ExactPoint& p : points) arr.push_back({p.x.str(), p.y.str()});
    nlohmann::json doc;
    doc["points"] = std::move(arr);
    return doc.dump();
}

}  // namespace segcross
