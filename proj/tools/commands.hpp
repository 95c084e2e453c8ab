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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sqw/io.hpp"
#include "sqw/line_analytic.hpp"
#include "sqw/state.hpp"

namespace sqw::cli {

enum class Model { Line, Graph, CoinedEmbedding };

struct RunConfig {
    Model model = Model::Line;
    LineParams params;
    /// Per-tessellation angles; in line mode the two entries are theta0, theta1.
    std::optional<double> theta0;
    std::optional<double> theta1;
    std::vector<double> angles;
    std::optional<std::size_t> ring_size;
    std::filesystem::path graph;
    std::optional<nlohmann::json> coin;
    int steps = 0;
    std::string init = "basis:0";
    std::filesystem::path out;
    std::filesystem::path moments_out;
};

/// Relative "graph" paths resolve against `base_dir`.
RunConfig run_config_from_json(const nlohmann::json &doc, const std::filesystem::path &base_dir);
RunConfig load_run_config(const std::filesystem::path &path);

struct InitialTerm {
    std::int64_t site = 0;
    Complex amplitude;
};

/// "basis:i", "uniform:i,j,..." or "i:re[:im],j:re[:im],...".
std::vector<InitialTerm> parse_initial_terms(std::string_view spec);

/// Default line ring: room for the light cone of every initial site plus a
/// margin of eight.
std::size_t default_ring_size(int steps, std::span<const InitialTerm> terms);

void cmd_simulate(const RunConfig &config, std::ostream &out, std::ostream &log);
void cmd_analytic(const RunConfig &config, std::ostream &out, std::ostream &log);

struct SurfaceGrid {
    std::vector<double> thetas;
    std::vector<double> alphas;
    std::filesystem::path out;
};

/// The default plotting grid: 101 x 101 over [0, pi]^2.
SurfaceGrid default_surface_grid();
void cmd_sigma_surface(const SurfaceGrid &grid, std::ostream &out, std::ostream &log);

struct EmbedRequest {
    std::filesystem::path graph;
    std::optional<nlohmann::json> coin;
    int steps = 32;
    std::string init = "basis:0";
    std::filesystem::path out;
};

void cmd_embed(const EmbedRequest &request, std::ostream &out, std::ostream &log);

nlohmann::json validation_report(const GraphDocument &doc);
void cmd_validate(const std::filesystem::path &graph, const std::filesystem::path &out, std::ostream &stdout_stream);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace sqw::cli
