// Copyright 2026 The sqw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sqw/graph.hpp"

namespace sqw {

/// 17 significant digits, enough to round-trip a double.
std::string format_double(double value);

/// Parses "pi/3", "-pi/2", "2pi/3", "2*pi/3", "3/4 pi", "0.25" and the like.
/// Throws ParseError.
double parse_angle(std::string_view text);

/// A JSON number, or a string accepted by parse_angle.
double angle_from_json(const nlohmann::json &value);

/// [re, im] or a bare real number.
Complex complex_from_json(const nlohmann::json &value);
nlohmann::json complex_to_json(Complex value);

/// A graph plus any tessellations (and, for coined input, a coin
/// descriptor) as read from a JSON document.
struct GraphDocument {
    Graph graph;
    std::vector<Tessellation> tessellations;
    std::optional<nlohmann::json> coin;
};

/// Throws ParseError on malformed documents and the graph_core errors on
/// invalid content. Polygons without amplitudes are uniform.
GraphDocument graph_document_from_json(const nlohmann::json &doc);
Tessellation tessellation_from_json(const nlohmann::json &value, std::size_t vertex_count);

nlohmann::json graph_to_json(const Graph &g, std::span<const Tessellation> tessellations = {});
nlohmann::json tessellation_to_json(const Tessellation &t);

nlohmann::json read_json_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

}  // namespace sqw
