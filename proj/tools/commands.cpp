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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "sqw/coined.hpp"
#include "sqw/simulation.hpp"

namespace sqw::cli {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string &message) { throw Error(ErrorKind::ParseError, message); }

Model parse_model(const std::string &name) {
    if (name == "line") {
        return Model::Line;
    }
    if (name == "graph") {
        return Model::Graph;
    }
    if (name == "coined-embedding") {
        return Model::CoinedEmbedding;
    }
    config_error("unknown model '" + name + "' (expected line, graph or coined-embedding)");
}

std::int64_t parse_integer(std::string_view text, std::string_view what) {
    std::string s(text);
    char *end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (s.empty() || end != s.c_str() + s.size()) {
        config_error("bad " + std::string(what) + " '" + s + "'");
    }
    return v;
}

double parse_number(std::string_view text) {
    std::string s(text);
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        config_error("bad amplitude component '" + s + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::filesystem::path &path, const std::string &text, std::ostream &out) {
    if (path.empty()) {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

json coin_argument(const std::string &value) {
    if (!value.empty() && value.front() == '{') {
        try {
            return json::parse(value);
        } catch (const json::parse_error &e) {
            config_error(std::string("inline coin descriptor: ") + e.what());
        }
    }
    const json doc = read_json_file(value);
    return doc.contains("coin") ? doc.at("coin") : doc;
}

WalkState state_from_terms(std::span<const InitialTerm> terms, std::size_t dimension,
                           const std::function<std::size_t(std::int64_t)> &index_of) {
    Amplitudes a(dimension);
    for (const InitialTerm &term : terms) {
        a[index_of(term.site)] += term.amplitude;
    }
    return WalkState::from_amplitudes(std::move(a));
}

std::size_t checked_index(std::int64_t site, std::size_t dimension) {
    if (site < 0 || static_cast<std::size_t>(site) >= dimension) {
        throw Error(ErrorKind::OutOfRangeVertex,
                    "initial site " + std::to_string(site) + " outside 0.." + std::to_string(dimension - 1), site);
    }
    return static_cast<std::size_t>(site);
}

std::int64_t max_abs_site(std::span<const InitialTerm> terms) {
    std::int64_t reach = 0;
    for (const auto &t : terms) {
        reach = std::max(reach, t.site < 0 ? -t.site : t.site);
    }
    return reach;
}

struct PreparedWalk {
    EvolutionOperator op;
    WalkState initial;
    std::vector<std::int64_t> positions;
    bool ring = false;
};

PreparedWalk prepare_line(const RunConfig &config) {
    const auto terms = parse_initial_terms(config.init);
    const std::size_t n = config.ring_size.value_or(default_ring_size(config.steps, terms));
    EvolutionOperator op = line_walk_operator(n, config.params, config.theta0.value_or(config.params.theta),
                                              config.theta1.value_or(config.params.theta));
    const auto ni = static_cast<std::int64_t>(n);
    WalkState psi = state_from_terms(terms, n, [&](std::int64_t site) {
        if (2 * site >= ni || 2 * site < -ni) {
            throw Error(ErrorKind::OutOfRangeVertex, "initial site " + std::to_string(site) + " is off the ring", site);
        }
        return static_cast<std::size_t>((site + ni) % ni);
    });
    return {std::move(op), std::move(psi), ring_positions(n), true};
}

GraphDocument load_graph(const std::filesystem::path &path) {
    if (path.empty()) {
        config_error("this model needs a graph file");
    }
    return graph_document_from_json(read_json_file(path));
}

std::vector<double> tessellation_angles(const RunConfig &config, std::size_t count) {
    if (!config.angles.empty()) {
        if (config.angles.size() != count) {
            throw Error(ErrorKind::DimensionMismatch, std::to_string(config.angles.size()) + " angles for " +
                                                          std::to_string(count) + " tessellations");
        }
        return config.angles;
    }
    std::vector<double> angles(count, config.params.theta);
    if (count >= 1 && config.theta0) {
        angles[0] = *config.theta0;
    }
    if (count >= 2 && config.theta1) {
        angles[1] = *config.theta1;
    }
    return angles;
}

PreparedWalk prepare_graph(const RunConfig &config) {
    const GraphDocument doc = load_graph(config.graph);
    if (doc.tessellations.empty()) {
        config_error("graph model needs at least one tessellation in " + config.graph.string());
    }
    const auto angles = tessellation_angles(config, doc.tessellations.size());
    std::vector<std::pair<double, OrthogonalReflection>> factors;
    for (std::size_t i = 0; i < doc.tessellations.size(); ++i) {
        factors.emplace_back(angles[i], reflection_from_tessellation(doc.graph, doc.tessellations[i]));
    }
    const std::size_t n = doc.graph.vertex_count();
    const auto terms = parse_initial_terms(config.init);
    WalkState psi = state_from_terms(terms, n, [&](std::int64_t s) { return checked_index(s, n); });
    std::vector<std::int64_t> positions(n);
    for (std::size_t v = 0; v < n; ++v) {
        positions[v] = static_cast<std::int64_t>(v);
    }
    return {compose(std::move(factors)), std::move(psi), std::move(positions), false};
}

CoinedWalk coined_walk_for(const GraphDocument &doc, const std::optional<json> &override_coin) {
    const json coin = override_coin ? *override_coin : doc.coin.value_or(json{{"type", "grover"}});
    return make_coined_walk(doc.graph, coin_from_json(coin, 2 * doc.graph.edge_count()));
}

PreparedWalk prepare_coined(const RunConfig &config) {
    const GraphDocument doc = load_graph(config.graph);
    const CoinedWalk cw = coined_walk_for(doc, config.coin);
    const std::size_t n = cw.arc_count();
    const auto terms = parse_initial_terms(config.init);
    WalkState psi = state_from_terms(terms, n, [&](std::int64_t s) { return checked_index(s, n); });
    // arcs report the position of their vertex
    std::vector<std::int64_t> positions(n);
    for (std::size_t i = 0; i < n; ++i) {
        positions[i] = static_cast<std::int64_t>(cw.expansion.arcs[i].vertex);
    }
    return {embed_coined_as_sqw(cw), std::move(psi), std::move(positions), false};
}

PreparedWalk prepare(const RunConfig &config) {
    switch (config.model) {
        case Model::Line:
            return prepare_line(config);
        case Model::Graph:
            return prepare_graph(config);
        case Model::CoinedEmbedding:
            break;
    }
    return prepare_coined(config);
}

double total(std::span<const double> p) {
    double sum = 0.0;
    for (double x : p) {
        sum += x;
    }
    return sum;
}

}  // namespace

RunConfig run_config_from_json(const json &doc, const std::filesystem::path &base_dir) {
    if (!doc.is_object()) {
        config_error("run config must be a JSON object");
    }
    RunConfig c;
    try {
        if (doc.contains("model")) {
            c.model = parse_model(doc.at("model").get<std::string>());
        }
        auto angle = [&](const char *key, double &target) {
            if (doc.contains(key)) {
                target = angle_from_json(doc.at(key));
            }
        };
        angle("theta", c.params.theta);
        angle("alpha", c.params.alpha);
        angle("beta", c.params.beta);
        angle("phi0", c.params.phi0);
        angle("phi1", c.params.phi1);
        if (doc.contains("theta0")) {
            c.theta0 = angle_from_json(doc.at("theta0"));
        }
        if (doc.contains("theta1")) {
            c.theta1 = angle_from_json(doc.at("theta1"));
        }
        if (doc.contains("angles")) {
            for (const json &a : doc.at("angles")) {
                c.angles.push_back(angle_from_json(a));
            }
        }
        if (doc.contains("ring_size")) {
            c.ring_size = doc.at("ring_size").get<std::size_t>();
        }
        if (doc.contains("graph")) {
            const std::filesystem::path g = doc.at("graph").get<std::string>();
            c.graph = g.is_absolute() ? g : base_dir / g;
        }
        if (doc.contains("coin")) {
            c.coin = doc.at("coin");
        }
        if (doc.contains("steps")) {
            c.steps = doc.at("steps").get<int>();
        }
        if (doc.contains("init")) {
            c.init = doc.at("init").get<std::string>();
        }
        if (doc.contains("out")) {
            c.out = doc.at("out").get<std::string>();
        }
        if (doc.contains("moments_out")) {
            c.moments_out = doc.at("moments_out").get<std::string>();
        }
    } catch (const json::exception &e) {
        config_error(std::string("run config: ") + e.what());
    }
    if (c.steps < 0) {
        throw Error(ErrorKind::DomainError, "steps must be non-negative");
    }
    return c;
}

RunConfig load_run_config(const std::filesystem::path &path) {
    return run_config_from_json(read_json_file(path), path.parent_path());
}

std::vector<InitialTerm> parse_initial_terms(std::string_view spec) {
    std::vector<InitialTerm> terms;
    if (spec.starts_with("basis:")) {
        terms.push_back({parse_integer(spec.substr(6), "basis index"), 1.0});
        return terms;
    }
    if (spec.starts_with("uniform:")) {
        const auto sites = split(spec.substr(8), ',');
        const double amp = 1.0 / std::sqrt(static_cast<double>(sites.size()));
        for (auto s : sites) {
            terms.push_back({parse_integer(s, "site"), amp});
        }
        return terms;
    }
    for (auto entry : split(spec, ',')) {
        const auto fields = split(entry, ':');
        if (fields.size() < 2 || fields.size() > 3) {
            config_error("initial state entry '" + std::string(entry) + "' is not site:re[:im]");
        }
        const double re = parse_number(fields[1]);
        const double im = fields.size() == 3 ? parse_number(fields[2]) : 0.0;
        terms.push_back({parse_integer(fields[0], "site"), Complex(re, im)});
    }
    return terms;
}

std::size_t default_ring_size(int steps, std::span<const InitialTerm> terms) {
    const std::size_t reach = static_cast<std::size_t>(max_abs_site(terms));
    return min_ring_size(steps) + 8 + 2 * reach;
}

void cmd_simulate(const RunConfig &config, std::ostream &out, std::ostream &log) {
    const PreparedWalk walk = prepare(config);
    std::vector<MomentSummary> rows;
    WalkState last = walk.initial;
    evolve_streaming(walk.op, walk.initial, config.steps, [&](int t, const WalkState &psi) {
        if (walk.ring) {
            wrap_check(psi, t, 1);
        }
        if (!config.moments_out.empty()) {
            rows.push_back(moments(distribution(psi, walk.positions), 2, t));
        }
        if (t == config.steps) {
            last = psi;
        }
    });
    const ProbabilityDistribution d = distribution(last, walk.positions);
    std::ostringstream table;
    write_distribution_tsv(table, d);
    emit(config.out, table.str(), out);
    if (!config.moments_out.empty()) {
        std::ostringstream m;
        write_moments_tsv(m, rows);
        write_text_file(config.moments_out, m.str());
    }
    const MomentSummary m = moments(d);
    log << "total_probability\t" << format_double(total(d.probabilities)) << '\n';
    log << "mean\t" << format_double(m.mean) << '\n';
    log << "sigma\t" << format_double(m.sigma) << '\n';
}

void cmd_analytic(const RunConfig &config, std::ostream &out, std::ostream &log) {
    if (config.model != Model::Line) {
        throw Error(ErrorKind::DomainError, "analytic solution exists for the line model only");
    }
    const double theta = config.params.theta;
    if (config.theta0.value_or(theta) != theta || config.theta1.value_or(theta) != theta) {
        throw Error(ErrorKind::DomainError, "analytic solution needs theta0 = theta1");
    }
    const auto terms = parse_initial_terms(config.init);
    const std::int64_t reach = 2 * static_cast<std::int64_t>(config.steps) + 2 + max_abs_site(terms);

    std::vector<std::pair<std::int64_t, Complex>> initial;
    for (const auto &t : terms) {
        initial.emplace_back(t.site, t.amplitude);
    }
    const Amplitudes analytic = wavefunction_superposition(config.params, config.steps, initial, -reach, reach);

    RunConfig sim_config = config;
    sim_config.ring_size = std::max(config.ring_size.value_or(0), default_ring_size(config.steps, terms));
    const PreparedWalk walk = prepare_line(sim_config);
    WalkState last = walk.initial;
    evolve_streaming(walk.op, walk.initial, config.steps, [&](int t, const WalkState &psi) {
        wrap_check(psi, t, 1);
        if (t == config.steps) {
            last = psi;
        }
    });
    const auto n = static_cast<std::int64_t>(last.dimension());

    std::ostringstream table;
    table << "position\tanalytic_probability\tsimulated_probability\tamplitude_deviation\n";
    double max_dev = 0.0;
    double analytic_total = 0.0;
    for (std::int64_t x = -reach; x <= reach; ++x) {
        const Complex a = analytic[static_cast<std::size_t>(x + reach)];
        const Complex s = last[static_cast<std::size_t>((x % n + n) % n)];
        const double dev = std::abs(a - s);
        max_dev = std::max(max_dev, dev);
        analytic_total += std::norm(a);
        table << x << '\t' << format_double(std::norm(a)) << '\t' << format_double(std::norm(s)) << '\t'
              << format_double(dev) << '\n';
    }
    emit(config.out, table.str(), out);
    log << "total_probability\t" << format_double(analytic_total) << '\n';
    log << "max_deviation\t" << format_double(max_dev) << '\n';
}

SurfaceGrid default_surface_grid() { return {linspace(0.0, M_PI, 101), linspace(0.0, M_PI, 101), {}}; }

void cmd_sigma_surface(const SurfaceGrid &grid, std::ostream &out, std::ostream &log) {
    const auto points = sigma2_surface(grid.thetas, grid.alphas);
    std::ostringstream table;
    write_surface_tsv(table, points);
    emit(grid.out, table.str(), out);
    double peak = 0.0;
    for (const auto &p : points) {
        peak = std::max(peak, p.sigma2_over_t2);
    }
    log << "points\t" << points.size() << '\n';
    log << "max_sigma2_over_t2\t" << format_double(peak) << '\n';
}

void cmd_embed(const EmbedRequest &request, std::ostream &out, std::ostream &log) {
    const GraphDocument doc = load_graph(request.graph);
    const CoinedWalk cw = coined_walk_for(doc, request.coin);
    const auto terms = parse_initial_terms(request.init);
    const std::size_t n = cw.arc_count();
    const WalkState psi = state_from_terms(terms, n, [&](std::int64_t s) { return checked_index(s, n); });
    const EquivalenceReport report = certify_equivalence(cw, request.steps, psi);

    const std::vector<Tessellation> tessellations = {shift_tessellation(cw), coin_tessellation(cw)};
    const json result = {
        {"original_graph", graph_to_json(cw.graph())},
        {"expanded_graph", graph_to_json(cw.expansion.expanded, tessellations)},
        {"coin_angle", cw.coin_angle},
        {"report", equivalence_report_to_json(report)},
    };
    emit(request.out, result.dump(2) + "\n", out);
    log << "expanded_vertices\t" << cw.expansion.expanded.vertex_count() << '\n';
    log << "expanded_edges\t" << cw.expansion.expanded.edge_count() << '\n';
    log << "max_state_deviation\t" << format_double(report.max_state_deviation) << '\n';
}

json validation_report(const GraphDocument &doc) {
    json entries = json::array();
    bool all_valid = true;
    for (std::size_t i = 0; i < doc.tessellations.size(); ++i) {
        json entry = {{"index", i}, {"polygons", doc.tessellations[i].polygons.size()}};
        try {
            validate_tessellation(doc.graph, doc.tessellations[i]);
            entry["valid"] = true;
        } catch (const Error &e) {
            all_valid = false;
            entry["valid"] = false;
            entry["error"] = std::string(error_kind_name(e.kind()));
            if (e.detail()) {
                entry["detail"] = *e.detail();
            }
            entry["message"] = e.what();
        }
        entries.push_back(std::move(entry));
    }
    json uncovered = json::array();
    for (const Edge &e : union_covers_edges(doc.graph, doc.tessellations)) {
        uncovered.push_back({e.u, e.v});
    }
    const bool covers = uncovered.empty();
    return {{"vertices", doc.graph.vertex_count()},
            {"edges", doc.graph.edge_count()},
            {"tessellations", std::move(entries)},
            {"all_valid", all_valid},
            {"uncovered_edges", std::move(uncovered)},
            {"covers_all_edges", covers}};
}

void cmd_validate(const std::filesystem::path &graph, const std::filesystem::path &out, std::ostream &stdout_stream) {
    const std::string text = validation_report(load_graph(graph)).dump(2) + "\n";
    stdout_stream << text;
    if (!out.empty()) {
        write_text_file(out, text);
    }
}

namespace {

struct RunOverrides {
    std::filesystem::path config;
    std::optional<std::string> model;
    std::optional<std::string> theta, theta0, theta1, alpha, beta, phi0, phi1;
    std::optional<int> steps;
    std::optional<std::size_t> ring_size;
    std::optional<std::string> init;
    std::optional<std::string> out;
    std::optional<std::string> graph;
    std::optional<std::string> coin;
    std::optional<std::string> moments;
};

void add_run_options(CLI::App *cmd, RunOverrides &o) {
    cmd->add_option("--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
    cmd->add_option("--model", o.model, "line, graph or coined-embedding");
    cmd->add_option("--theta", o.theta, "angle, e.g. pi/4");
    cmd->add_option("--theta0", o.theta0, "angle of the first local unitary");
    cmd->add_option("--theta1", o.theta1, "angle of the second local unitary");
    cmd->add_option("--alpha", o.alpha, "even-polygon angle");
    cmd->add_option("--beta", o.beta, "odd-polygon angle");
    cmd->add_option("--phi0", o.phi0, "even-polygon phase");
    cmd->add_option("--phi1", o.phi1, "odd-polygon phase");
    cmd->add_option("--steps", o.steps, "number of steps")->check(CLI::NonNegativeNumber);
    cmd->add_option("--ring-size", o.ring_size, "even ring size for the line model");
    cmd->add_option("--init", o.init, "basis:i, uniform:i,j or i:re[:im],...");
    cmd->add_option("--out", o.out, "output path (stdout if absent)");
    cmd->add_option("--graph", o.graph, "graph JSON file");
    cmd->add_option("--coin", o.coin, "coin descriptor file or inline JSON");
    cmd->add_option("--moments", o.moments, "per-step moments TSV path");
}

RunConfig resolve(const RunOverrides &o) {
    RunConfig c = o.config.empty() ? RunConfig{} : load_run_config(o.config);
    if (o.model) {
        c.model = parse_model(*o.model);
    }
    auto angle = [](const std::optional<std::string> &v, double &target) {
        if (v) {
            target = parse_angle(*v);
        }
    };
    angle(o.theta, c.params.theta);
    angle(o.alpha, c.params.alpha);
    angle(o.beta, c.params.beta);
    angle(o.phi0, c.params.phi0);
    angle(o.phi1, c.params.phi1);
    if (o.theta0) {
        c.theta0 = parse_angle(*o.theta0);
    }
    if (o.theta1) {
        c.theta1 = parse_angle(*o.theta1);
    }
    if (o.steps) {
        c.steps = *o.steps;
    }
    if (o.ring_size) {
        c.ring_size = *o.ring_size;
    }
    if (o.init) {
        c.init = *o.init;
    }
    if (o.out) {
        c.out = *o.out;
    }
    if (o.graph) {
        c.graph = *o.graph;
    }
    if (o.coin) {
        c.coin = coin_argument(*o.coin);
    }
    if (o.moments) {
        c.moments_out = *o.moments;
    }
    return c;
}

std::vector<double> angle_list(const std::string &text) {
    std::vector<double> out;
    for (auto part : split(text, ',')) {
        out.push_back(parse_angle(part));
    }
    return out;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Staggered quantum walk simulator"};
    app.name("sqw");
    app.require_subcommand(1);

    RunOverrides sim;
    auto *simulate = app.add_subcommand("simulate", "evolve a walk and write its position distribution");
    add_run_options(simulate, sim);

    RunOverrides ana;
    auto *analytic = app.add_subcommand("analytic", "compare the Fourier solution of the line walk with simulation");
    add_run_options(analytic, ana);

    auto *surface = app.add_subcommand("sigma-surface", "tabulate sigma^2/t^2 over (theta, alpha)");
    std::size_t theta_count = 101;
    std::size_t alpha_count = 101;
    std::string theta_min = "0", theta_max = "pi", alpha_min = "0", alpha_max = "pi";
    std::optional<std::string> thetas, alphas, surface_out;
    surface->add_option("--theta-count", theta_count, "grid points along theta")->check(CLI::PositiveNumber);
    surface->add_option("--alpha-count", alpha_count, "grid points along alpha")->check(CLI::PositiveNumber);
    surface->add_option("--theta-min", theta_min, "lower theta bound (default 0)");
    surface->add_option("--theta-max", theta_max, "upper theta bound (default pi)");
    surface->add_option("--alpha-min", alpha_min, "lower alpha bound (default 0)");
    surface->add_option("--alpha-max", alpha_max, "upper alpha bound (default pi)");
    surface->add_option("--thetas", thetas, "explicit comma-separated theta values");
    surface->add_option("--alphas", alphas, "explicit comma-separated alpha values");
    surface->add_option("--out", surface_out, "output path (stdout if absent)");

    auto *embed = app.add_subcommand("embed", "certify a coined walk against its staggered embedding");
    EmbedRequest request;
    std::optional<std::string> embed_coin;
    std::optional<std::string> embed_out;
    embed->add_option("--graph", request.graph, "graph JSON file")->required()->check(CLI::ExistingFile);
    embed->add_option("--coin", embed_coin, "coin descriptor file or inline JSON");
    embed->add_option("--steps", request.steps, "steps to compare")->check(CLI::NonNegativeNumber);
    embed->add_option("--init", request.init, "initial arc state");
    embed->add_option("--out", embed_out, "output path (stdout if absent)");

    auto *validate = app.add_subcommand("validate", "check tessellations and edge coverage");
    std::filesystem::path validate_graph;
    std::filesystem::path validate_out;
    validate->add_option("--graph", validate_graph, "graph JSON file")->required()->check(CLI::ExistingFile);
    validate->add_option("--out", validate_out, "also write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        if (simulate->parsed()) {
            const RunConfig c = resolve(sim);
            cmd_simulate(c, out, c.out.empty() ? err : out);
        } else if (analytic->parsed()) {
            const RunConfig c = resolve(ana);
            cmd_analytic(c, out, c.out.empty() ? err : out);
        } else if (surface->parsed()) {
            SurfaceGrid grid;
            grid.thetas = thetas ? angle_list(*thetas)
                                 : linspace(parse_angle(theta_min), parse_angle(theta_max), theta_count);
            grid.alphas = alphas ? angle_list(*alphas)
                                 : linspace(parse_angle(alpha_min), parse_angle(alpha_max), alpha_count);
            grid.out = surface_out.value_or("");
            cmd_sigma_surface(grid, out, grid.out.empty() ? err : out);
        } else if (embed->parsed()) {
            if (embed_coin) {
                request.coin = coin_argument(*embed_coin);
            }
            request.out = embed_out.value_or("");
            cmd_embed(request, out, request.out.empty() ? err : out);
        } else if (validate->parsed()) {
            cmd_validate(validate_graph, validate_out, out);
        }
    } catch (const Error &e) {
        err << "sqw: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        err << "sqw: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace sqw::cli
