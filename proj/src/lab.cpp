#include "degcorr/lab.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>

#include "json.hpp"

#include "degcorr/error.hpp"
#include "degcorr/theory.hpp"
#include "degcorr/transient.hpp"

#ifndef DEGCORR_VERSION
#define DEGCORR_VERSION "0.0.0"
#endif

namespace degcorr {

using ordered_json = nlohmann::ordered_json;

std::string_view tool_version() { return DEGCORR_VERSION; }

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm parts{};
    gmtime_r(&now, &parts);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
    return buf;
}

namespace {

ordered_json manifest_json(const RunManifest& mf) {
    ordered_json j;
    j["command"] = mf.command;
    j["mode"] = std::string(to_string(mf.mode));
    j["m"] = mf.m;
    j["n0"] = mf.n0;
    j["steps"] = mf.steps;
    j["replicas"] = mf.replicas;
    j["seed"] = mf.seed;
    j["max_k"] = mf.max_k;
    j["tail_epsilon"] = mf.tail_epsilon;
    j["version"] = mf.version.empty() ? std::string(tool_version()) : mf.version;
    j["timestamp"] = mf.timestamp;
    return j;
}

ordered_json optional_number(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

ordered_json int_keyed(const std::map<int, double>& values) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : values) j[std::to_string(k)] = v;
    return j;
}

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) fail(ErrorKind::io_error, "cannot create " + dir.string() + ": " + ec.message());
}

std::filesystem::path grid_path(const OutputOptions& out, const std::string& stem) {
    return out.out_dir / (stem + std::string(extension(out.format)));
}

void write_json(const std::filesystem::path& path, const ordered_json& j) { write_text(path, j.dump(2) + "\n"); }

void check_manifest(const RunManifest& mf) {
    require(mf.m >= 1, ErrorKind::invalid_parameter, "m must be at least 1");
    require(mf.max_k >= 1, ErrorKind::invalid_parameter, "max-k must be at least 1");
    require(mf.tail_epsilon > 0.0 && mf.tail_epsilon < 1.0, ErrorKind::invalid_parameter,
            "tail-eps must lie in (0, 1)");
}

}  // namespace

std::string render_manifest(const RunManifest& manifest) { return manifest_json(manifest).dump(2) + "\n"; }

RunManifest parse_manifest(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::parse_error, std::string("manifest: ") + e.what());
    }
    try {
        RunManifest mf;
        mf.command = j.value("command", mf.command);
        const auto mode = parse_mode(j.at("mode").get<std::string>());
        require(mode.has_value(), ErrorKind::parse_error, "manifest: unknown mode");
        mf.mode = *mode;
        mf.m = j.at("m").get<int>();
        mf.n0 = j.at("n0").get<int>();
        mf.steps = j.at("steps").get<std::int64_t>();
        mf.replicas = j.at("replicas").get<int>();
        mf.seed = j.at("seed").get<std::uint64_t>();
        mf.max_k = j.value("max_k", mf.max_k);
        mf.tail_epsilon = j.value("tail_epsilon", mf.tail_epsilon);
        mf.version = j.value("version", std::string());
        mf.timestamp = j.value("timestamp", std::string());
        return mf;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::parse_error, std::string("manifest: ") + e.what());
    }
}

Window parse_window(std::string_view text) {
    const auto colon = text.find(':');
    require(colon != std::string_view::npos, ErrorKind::usage, "window must look like k1:k2");
    Window w;
    const auto parse = [&](std::string_view part, int& out) {
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
        require(ec == std::errc() && ptr == part.data() + part.size(), ErrorKind::usage,
                "window bound '" + std::string(part) + "' is not an integer");
    };
    parse(text.substr(0, colon), w.lo);
    parse(text.substr(colon + 1), w.hi);
    require(w.lo >= 0 && w.lo <= w.hi, ErrorKind::usage, "window needs 0 <= k1 <= k2");
    return w;
}

Window default_window(int m) { return {m, m + 5}; }

ErrorTable error_table(const GridDocument& sim, const GridDocument& theory, const Window& window) {
    require(sim.mode() == theory.mode(), ErrorKind::incompatible_inputs,
            "mode mismatch: " + std::string(to_string(sim.mode())) + " vs " + std::string(to_string(theory.mode())));
    require(sim.m == theory.m, ErrorKind::incompatible_inputs,
            "m mismatch: " + std::to_string(sim.m) + " vs " + std::to_string(theory.m));
    require(window.lo >= 0 && window.lo <= window.hi, ErrorKind::invalid_parameter, "empty window");

    ErrorTable table;
    table.window = window;
    const auto size = static_cast<std::size_t>(window.hi - window.lo + 1);
    table.cells.assign(size, std::vector<double>(size, 0.0));
    CompensatedSum sum;
    for (int k1 = window.lo; k1 <= window.hi; ++k1)
        for (int k2 = window.lo; k2 <= window.hi; ++k2) {
            const double e = std::abs(sim.entries.unordered(k1, k2) - theory.entries.unordered(k1, k2));
            table.cells[static_cast<std::size_t>(k1 - window.lo)][static_cast<std::size_t>(k2 - window.lo)] = e;
            table.max_error = std::max(table.max_error, e);
            sum += e;
        }
    table.mean_error = sum.value() / static_cast<double>(size * size);
    return table;
}

std::string render_error_csv(const ErrorTable& table) {
    std::string out = "k1\\k2";
    for (int k2 = table.window.lo; k2 <= table.window.hi; ++k2) out += "," + std::to_string(k2);
    out += '\n';
    for (std::size_t r = 0; r < table.cells.size(); ++r) {
        out += std::to_string(table.window.lo + static_cast<int>(r));
        for (double e : table.cells[r]) out += "," + format_double(e);
        out += '\n';
    }
    return out;
}

SprEdgeStats spr_edge_stats(const std::vector<Network>& networks, Mode mode) {
    require(!networks.empty(), ErrorKind::empty_input, "no networks in the requested class");
    const std::size_t edges = networks.front().edge_count();
    require(edges > 0, ErrorKind::empty_input, "networks have no edges");
    int top = 0;
    for (const Network& net : networks) {
        require(net.edge_count() == edges, ErrorKind::incompatible_inputs, "networks differ in edge count");
        for (int d : net.degrees()) top = std::max(top, d);
    }

    // per-network fractions: accumulate sum and sum of squares per cell
    DegreeMatrix sum(mode, top), sum_sq(mode, top), one(mode, top);
    const double unit = 1.0 / static_cast<double>(edges);
    for (const Network& net : networks) {
        one = DegreeMatrix(mode, top);
        for (const Edge& e : net.edges()) {
            int a = net.degree(e.creator), b = net.degree(e.target);
            if (mode == Mode::undirected && a > b) std::swap(a, b);
            one(a, b) += unit;
        }
        for (int a = 0; a <= top; ++a)
            for (int b = 0; b <= top; ++b) {
                const double x = one(a, b);
                if (x == 0.0) continue;
                sum(a, b) += x;
                sum_sq(a, b) += x * x;
            }
    }

    SprEdgeStats stats;
    stats.networks = networks.size();
    stats.edges_per_network = edges;
    stats.mean = DegreeMatrix(mode, top);
    stats.standard_error = DegreeMatrix(mode, top);
    const double n = static_cast<double>(networks.size());
    for (int a = 0; a <= top; ++a)
        for (int b = 0; b <= top; ++b) {
            const double mean = sum(a, b) / n;
            stats.mean(a, b) = mean;
            if (networks.size() > 1) {
                const double var = std::max(0.0, (sum_sq(a, b) - n * mean * mean) / (n - 1.0));
                stats.standard_error(a, b) = std::sqrt(var / n);
            }
        }
    return stats;
}

SimulateOutcome simulate(const RunManifest& manifest, int jobs) {
    check_manifest(manifest);
    EnsembleParams params;
    params.growth = GrowthParams{manifest.m, manifest.n0, manifest.steps, manifest.seed, 0};
    params.replicas = manifest.replicas;
    params.mode = manifest.mode;
    const std::vector<ReplicaResult> results = run_replicas(params, jobs);
    SimulateOutcome outcome;
    outcome.summary = summarize(results);
    outcome.grid = to_document(outcome.summary.merged);
    return outcome;
}

void cmd_simulate(const SimulateCommand& cmd) {
    RunManifest mf = cmd.manifest;
    mf.command = "simulate";
    mf.version = std::string(tool_version());
    if (mf.timestamp.empty()) mf.timestamp = utc_timestamp();
    const SimulateOutcome outcome = simulate(mf, cmd.jobs);
    ensure_dir(cmd.output.out_dir);
    write_grid(grid_path(cmd.output, "grid"), outcome.grid, cmd.output.format);

    const EnsembleSummary& s = outcome.summary;
    ordered_json summary;
    summary["mode"] = std::string(to_string(mf.mode));
    summary["m"] = mf.m;
    summary["replicas"] = s.merged.replicas_merged;
    summary["edge_count"] = s.merged.edge_count;
    summary["r"] = optional_number(s.correlation.pearson_r);
    summary["knn"] = int_keyed(s.correlation.knn);
    summary["knn_support"] = int_keyed(s.correlation.knn_support);
    summary["edge_knn"] = int_keyed(s.edge_knn);
    summary["histogram"] = int_keyed(s.histogram.counts);
    summary["total_nodes"] = s.histogram.total_nodes;
    write_json(cmd.output.out_dir / "summary.json", summary);
    write_text(cmd.output.out_dir / "manifest.json", render_manifest(mf));

    if (cmd.save_networks) {
        const auto dir = cmd.output.out_dir / "networks";
        ensure_dir(dir);
        for (int i = 0; i < mf.replicas; ++i) {
            GrowthParams g{mf.m, mf.n0, mf.steps, mf.seed, static_cast<std::uint64_t>(i)};
            std::ofstream out(dir / ("replica_" + std::to_string(i) + ".edges"));
            if (!out) fail(ErrorKind::io_error, "cannot write networks under " + dir.string());
            write_edge_list(out, grow_run(g), g);
        }
    }
}

void cmd_theory(const TheoryCommand& cmd) {
    const RunManifest& mf = cmd.manifest;
    check_manifest(mf);
    ensure_dir(cmd.output.out_dir);

    switch (cmd.kind) {
    case TheoryCommand::Kind::stationary: {
        const StationaryGrid grid = stationary_adaptive({mf.m, mf.max_k, mf.tail_epsilon, mf.mode});
        write_grid(grid_path(cmd.output, "grid"), to_document(grid), cmd.output.format);
        ordered_json summary;
        summary["mode"] = std::string(to_string(mf.mode));
        summary["m"] = mf.m;
        summary["max_k"] = grid.max_k();
        summary["tail_mass"] = grid.tail_mass;
        summary["r"] = optional_number(grid_r(grid));
        summary["edge_knn"] = int_keyed(grid_knn(grid));
        write_json(cmd.output.out_dir / "summary.json", summary);
        break;
    }
    case TheoryCommand::Kind::transient: {
        require(cmd.every >= 0, ErrorKind::invalid_parameter, "every must be non-negative");
        TransientOptions opts{mf.max_k, mf.tail_epsilon, cmd.jobs};
        const auto observer = [&](const EdgeStateDistribution& d) {
            if (cmd.every > 0 && d.t % cmd.every == 0)
                write_grid(grid_path(cmd.output, "grid_t" + std::to_string(d.t)), to_document(d), cmd.output.format);
        };
        const EdgeStateDistribution last = transient_run(mf.mode, mf.m, mf.n0, mf.steps, opts, observer);
        write_grid(grid_path(cmd.output, "grid"), to_document(last), cmd.output.format);
        break;
    }
    case TheoryCommand::Kind::gf: {
        require(cmd.rows >= 1, ErrorKind::invalid_parameter, "rows must be at least 1");
        const std::vector<GFRow> rows = mf.mode == Mode::directed ? gf_rows_directed(mf.m, cmd.rows, mf.max_k)
                                                                   : gf_rows_undirected(mf.m, cmd.rows, mf.max_k);
        const StationaryGrid grid = stationary(mf.mode, mf.m, mf.max_k);
        double discrepancy = 0.0;
        ordered_json j;
        j["mode"] = std::string(to_string(mf.mode));
        j["m"] = mf.m;
        j["max_k"] = mf.max_k;
        ordered_json list = ordered_json::array();
        for (const GFRow& row : rows) {
            ordered_json coeffs = ordered_json::array();
            for (int k = 0; k <= mf.max_k; ++k) {
                const double c = row.coefficient(k);
                discrepancy = std::max(discrepancy, std::abs(c - grid.entries.unordered(row.row, k)));
                if (c != 0.0) coeffs.push_back(ordered_json::array({k, c}));
            }
            ordered_json r;
            r["row"] = row.row;
            r["value_at_one"] = row.value_at_one();
            r["coefficients"] = std::move(coeffs);
            list.push_back(std::move(r));
        }
        j["recursion_max_abs_diff"] = discrepancy;
        j["rows"] = std::move(list);
        write_json(cmd.output.out_dir / "gf.json", j);
        break;
    }
    }
}

ErrorTable cmd_compare(const CompareCommand& cmd) {
    const GridDocument sim = read_grid(cmd.simulated);
    const GridDocument theory = read_grid(cmd.theory);
    const Window window = cmd.window.value_or(default_window(sim.m));
    const ErrorTable table = error_table(sim, theory, window);
    ensure_dir(cmd.output.out_dir);
    write_text(cmd.output.out_dir / "errors.csv", render_error_csv(table));
    ordered_json summary;
    summary["mode"] = std::string(to_string(sim.mode()));
    summary["m"] = sim.m;
    summary["window"] = ordered_json::array({table.window.lo, table.window.hi});
    summary["max_error"] = table.max_error;
    summary["mean_error"] = table.mean_error;
    summary["simulated"] = cmd.simulated.string();
    summary["theory"] = cmd.theory.string();
    write_json(cmd.output.out_dir / "summary.json", summary);
    return table;
}

double cmd_spr(const SprCommand& cmd) {
    RunManifest mf = cmd.manifest;
    mf.command = "spr";
    mf.version = std::string(tool_version());
    if (mf.timestamp.empty()) mf.timestamp = utc_timestamp();
    check_manifest(mf);
    require(mf.m == 1, ErrorKind::unsupported_mode, "spr supports m = 1 only");
    require(mf.replicas >= 1, ErrorKind::invalid_parameter, "ensemble size must be positive");
    require(mf.steps >= 0, ErrorKind::invalid_parameter, "generations must be non-negative");

    const std::size_t clique_edges = static_cast<std::size_t>(mf.n0) * static_cast<std::size_t>(mf.n0 - 1) / 2;
    SprEnsemble ens = spr_run(mf.n0, 0, static_cast<std::size_t>(mf.replicas), mf.seed, mf.m);
    EdgeStateDistribution predicted = transient_initial(mf.mode, mf.m, mf.n0, mf.max_k);

    double worst_z = 0.0;
    ordered_json generations = ordered_json::array();
    for (std::int64_t g = 0;; ++g) {
        const std::size_t edge_class = clique_edges + static_cast<std::size_t>(g);
        ordered_json gen;
        gen["generation"] = g;
        gen["population"] = ens.population();
        ordered_json classes = ordered_json::array();
        for (const auto& [c, s] : ens.last_step)
            classes.push_back({{"class", c}, {"input", s.input}, {"groups", s.groups}, {"carryover", s.carryover},
                               {"output", s.output}});
        gen["class_stats"] = std::move(classes);
        ordered_json sizes = ordered_json::object();
        for (const auto& [c, nets] : ens.buckets) sizes[std::to_string(c)] = nets.size();
        gen["bucket_sizes"] = std::move(sizes);
        gen["edge_class"] = edge_class;

        const auto it = ens.buckets.find(edge_class);
        if (it != ens.buckets.end() && !it->second.empty()) {
            const SprEdgeStats stats = spr_edge_stats(it->second, mf.mode);
            gen["networks"] = stats.networks;
            const int top = std::max(stats.mean.max_degree(), predicted.max_k());
            ordered_json cells = ordered_json::array();
            double gen_worst = 0.0;
            double gen_diff = 0.0;
            for (int a = 0; a <= top; ++a)
                for (int b = 0; b <= top; ++b) {
                    const double mean = stats.mean.get(a, b);
                    const double pred = predicted.entries.get(a, b);
                    if (mean == 0.0 && pred == 0.0) continue;
                    const double se = stats.standard_error.get(a, b);
                    const double diff = mean - pred;
                    gen_diff = std::max(gen_diff, std::abs(diff));
                    ordered_json cell = {a, b, mean, se, pred};
                    if (se > 0.0) {
                        cell.push_back(diff / se);
                        gen_worst = std::max(gen_worst, std::abs(diff / se));
                    } else {
                        cell.push_back(nullptr);
                    }
                    cells.push_back(std::move(cell));
                }
            gen["cells"] = std::move(cells);
            gen["max_abs_z"] = gen_worst;
            gen["max_abs_diff"] = gen_diff;
            if (g == mf.steps) worst_z = gen_worst;
        } else {
            gen["networks"] = 0;
        }
        generations.push_back(std::move(gen));
        if (g == mf.steps) break;
        ens = spr_step(ens, mf.seed, mf.m);
        predicted = transient_step(predicted, 1);
    }

    ordered_json report;
    report["mode"] = std::string(to_string(mf.mode));
    report["m"] = mf.m;
    report["n0"] = mf.n0;
    report["ensemble_size"] = mf.replicas;
    report["cell_columns"] = {"k1", "k2", "mean", "standard_error", "predicted", "z"};
    report["generations"] = std::move(generations);
    ensure_dir(cmd.output.out_dir);
    write_json(cmd.output.out_dir / "spr.json", report);
    write_text(cmd.output.out_dir / "manifest.json", render_manifest(mf));
    return worst_z;
}

}  // namespace degcorr
