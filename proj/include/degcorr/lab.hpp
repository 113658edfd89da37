#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degcorr/degree_matrix.hpp"
#include "degcorr/ensemble.hpp"
#include "degcorr/grid_io.hpp"
#include "degcorr/spr.hpp"

namespace degcorr {

std::string_view tool_version();

/// Everything needed to replay a run. The timestamp is informational only.
struct RunManifest {
    std::string command = "simulate";
    Mode mode = Mode::undirected;
    int m = 1;
    int n0 = 3;
    std::int64_t steps = 20000;
    int replicas = 100;
    std::uint64_t seed = 1;
    int max_k = 60;
    double tail_epsilon = 1e-10;
    std::string version;
    std::string timestamp;
};

std::string render_manifest(const RunManifest& manifest);
RunManifest parse_manifest(std::string_view text);
/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

/// Inclusive degree range used on both axes.
struct Window {
    int lo = 1;
    int hi = 6;
};

/// Parses "a:b" with 0 <= a <= b.
Window parse_window(std::string_view text);
/// The 6x6 block starting at k = m.
Window default_window(int m);

struct ErrorTable {
    Window window;
    std::vector<std::vector<double>> cells;  ///< cells[k1 - lo][k2 - lo]
    double max_error = 0.0;
    double mean_error = 0.0;
};

/// |sim - theory| per cell. Undirected tables are read as unordered pairs so
/// the whole square is filled.
ErrorTable error_table(const GridDocument& sim, const GridDocument& theory, const Window& window);
std::string render_error_csv(const ErrorTable& table);

/// Mean edge-state fraction per cell over the networks of one class, with the
/// standard error of that mean.
struct SprEdgeStats {
    std::size_t networks = 0;
    std::size_t edges_per_network = 0;
    DegreeMatrix mean;
    DegreeMatrix standard_error;
};

SprEdgeStats spr_edge_stats(const std::vector<Network>& networks, Mode mode);

struct SimulateOutcome {
    EnsembleSummary summary;
    GridDocument grid;
};

SimulateOutcome simulate(const RunManifest& manifest, int jobs);

struct OutputOptions {
    std::filesystem::path out_dir = ".";
    GridFormat format = GridFormat::json;
};

struct SimulateCommand {
    RunManifest manifest;
    int jobs = 0;
    OutputOptions output;
    bool save_networks = false;
};

/// Writes grid.<fmt>, summary.json and manifest.json (plus networks/ when asked).
void cmd_simulate(const SimulateCommand& cmd);

struct TheoryCommand {
    enum class Kind { stationary, transient, gf } kind = Kind::stationary;
    RunManifest manifest;  ///< mode, m, n0, steps, max_k, tail_epsilon are used
    int rows = 6;
    std::int64_t every = 0;  ///< transient: also write grid_t<t> every this many steps
    int jobs = 0;
    OutputOptions output;
};

/// stationary: grid.<fmt> + summary.json; transient: grid.<fmt> (final) and
/// optional snapshots; gf: gf.json.
void cmd_theory(const TheoryCommand& cmd);

struct CompareCommand {
    std::filesystem::path simulated;
    std::filesystem::path theory;
    std::optional<Window> window;
    OutputOptions output;
};

/// Writes errors.csv and summary.json and returns the table.
ErrorTable cmd_compare(const CompareCommand& cmd);

struct SprCommand {
    RunManifest manifest;  ///< steps = generations, replicas = ensemble size
    OutputOptions output;
};

/// Writes spr.json and manifest.json. Returns the largest |z| over the cells
/// compared at the final generation.
double cmd_spr(const SprCommand& cmd);

}  // namespace degcorr
