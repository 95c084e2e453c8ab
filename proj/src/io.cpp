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

#include "sqw/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sqw {

using nlohmann::json;

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

namespace {

[[noreturn]] void angle_error(std::string_view text, const std::string &why) {
    throw Error(ErrorKind::ParseError, "cannot parse angle '" + std::string(text) + "': " + why);
}

// Whole-string strtod; empty input is rejected.
double parse_real(std::string_view text, std::string_view original) {
    if (text.empty()) {
        angle_error(original, "missing number");
    }
    std::string s(text);
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v)) {
        angle_error(original, "'" + s + "' is not a number");
    }
    return v;
}

// "a" or "a/b"
double parse_ratio(std::string_view text, std::string_view original) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return parse_real(text, original);
    }
    const double den = parse_real(text.substr(slash + 1), original);
    if (den == 0.0) {
        angle_error(original, "division by zero");
    }
    return parse_real(text.substr(0, slash), original) / den;
}

}  // namespace

double parse_angle(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (c != ' ' && c != '\t') {
            compact.push_back(c);
        }
    }
    const std::string_view s = compact;
    const auto pi = s.find("pi");
    if (pi == std::string_view::npos) {
        return parse_ratio(s, text);
    }
    std::string_view left = s.substr(0, pi);
    std::string_view right = s.substr(pi + 2);
    if (!left.empty() && left.back() == '*') {
        left.remove_suffix(1);
    }
    double sign = 1.0;
    if (!left.empty() && (left.front() == '-' || left.front() == '+')) {
        sign = left.front() == '-' ? -1.0 : 1.0;
        left.remove_prefix(1);
    }
    const double coefficient = left.empty() ? 1.0 : parse_ratio(left, text);
    double denominator = 1.0;
    if (!right.empty()) {
        if (right.front() != '/') {
            angle_error(text, "expected '/' after pi");
        }
        denominator = parse_real(right.substr(1), text);
        if (denominator == 0.0) {
            angle_error(text, "division by zero");
        }
    }
    return sign * coefficient * M_PI / denominator;
}

double angle_from_json(const json &value) {
    if (value.is_number()) {
        return value.get<double>();
    }
    if (value.is_string()) {
        return parse_angle(value.get<std::string>());
    }
    throw Error(ErrorKind::ParseError, "angle must be a number or a string, got " + value.dump());
}

Complex complex_from_json(const json &value) {
    if (value.is_number()) {
        return {value.get<double>(), 0.0};
    }
    if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        return {value[0].get<double>(), value[1].get<double>()};
    }
    throw Error(ErrorKind::ParseError, "amplitude must be a number or [re, im], got " + value.dump());
}

json complex_to_json(Complex value) { return json::array({value.real(), value.imag()}); }

namespace {

template <typename T>
T field(const json &obj, const char *key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
    }
}

// nlohmann converts -1 to a huge unsigned value without complaint
Vertex vertex_from_json(const json &v) {
    if (!v.is_number_unsigned()) {
        throw Error(ErrorKind::ParseError, "vertex index must be a non-negative integer, got " + v.dump());
    }
    return v.get<Vertex>();
}

std::vector<Vertex> vertices_from_json(const json &list) {
    if (!list.is_array()) {
        throw Error(ErrorKind::ParseError, "expected an array of vertices, got " + list.dump());
    }
    std::vector<Vertex> out;
    out.reserve(list.size());
    for (const json &v : list) {
        out.push_back(vertex_from_json(v));
    }
    return out;
}

Tessellation parse_tessellation(const json &value, std::size_t vertex_count) {
    Tessellation t{vertex_count, {}};
    const json &polygons = value.is_array() ? value : value.value("polygons", json());
    if (!polygons.is_array()) {
        throw Error(ErrorKind::ParseError, "tessellation needs a 'polygons' array");
    }
    for (const json &p : polygons) {
        auto vertices = vertices_from_json(p.is_array() ? p : field<json>(p, "vertices"));
        if (p.is_object() && p.contains("amplitudes")) {
            std::vector<Complex> amplitudes;
            for (const json &a : p.at("amplitudes")) {
                amplitudes.push_back(complex_from_json(a));
            }
            t.polygons.emplace_back(std::move(vertices), std::move(amplitudes));
        } else {
            t.polygons.push_back(uniform_polygon(std::move(vertices)));
        }
    }
    return t;
}

GraphDocument parse_graph_document(const json &doc) {
    GraphDocument out;
    const auto n = field<std::size_t>(doc, "vertices");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const json &e : field<json>(doc, "edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw Error(ErrorKind::ParseError, "edge must be [u, v], got " + e.dump());
        }
        edges.emplace_back(vertex_from_json(e[0]), vertex_from_json(e[1]));
    }
    out.graph = build_graph(n, edges);
    if (doc.contains("labels")) {
        out.graph.set_labels(doc.at("labels").get<std::vector<std::string>>());
    }
    if (doc.contains("tessellations")) {
        for (const json &t : doc.at("tessellations")) {
            out.tessellations.push_back(parse_tessellation(t, n));
        }
    }
    if (doc.contains("coin")) {
        out.coin = doc.at("coin");
    }
    return out;
}

}  // namespace

Tessellation tessellation_from_json(const json &value, std::size_t vertex_count) {
    try {
        return parse_tessellation(value, vertex_count);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("tessellation: ") + e.what());
    }
}

GraphDocument graph_document_from_json(const json &doc) {
    try {
        return parse_graph_document(doc);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("graph document: ") + e.what());
    }
}

json tessellation_to_json(const Tessellation &t) {
    json polygons = json::array();
    for (const Polygon &p : t.polygons) {
        json amplitudes = json::array();
        for (const Complex &a : p.amplitudes()) {
            amplitudes.push_back(complex_to_json(a));
        }
        polygons.push_back({{"vertices", std::vector<Vertex>(p.vertices().begin(), p.vertices().end())},
                            {"amplitudes", std::move(amplitudes)}});
    }
    return {{"polygons", std::move(polygons)}};
}

json graph_to_json(const Graph &g, std::span<const Tessellation> tessellations) {
    json edges = json::array();
    for (const Edge &e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    json doc = {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
    if (!g.labels().empty()) {
        doc["labels"] = g.labels();
    }
    if (!tessellations.empty()) {
        json ts = json::array();
        for (const Tessellation &t : tessellations) {
            ts.push_back(tessellation_to_json(t));
        }
        doc["tessellations"] = std::move(ts);
    }
    return doc;
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::ParseError, "cannot write " + path.string());
    }
    out << text;
}

}  // namespace sqw
