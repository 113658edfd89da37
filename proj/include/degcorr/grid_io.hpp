#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "degcorr/degree_matrix.hpp"
#include "degcorr/edge_state.hpp"
#include "degcorr/estimators.hpp"

namespace degcorr {

enum class GridFormat { json, csv };

std::optional<GridFormat> parse_format(std::string_view text);
std::string_view extension(GridFormat format);

/// What a grid file carries: the table plus enough metadata to check that two
/// files are comparable.
struct GridDocument {
    std::string kind;  ///< "simulated", "stationary" or "transient"
    int m = 1;
    double tail_mass = 0.0;
    DegreeMatrix entries;
    std::optional<std::uint64_t> edge_count;
    std::optional<int> replicas;
    std::optional<std::int64_t> t;

    Mode mode() const noexcept { return entries.mode(); }
    int max_k() const noexcept { return entries.max_degree(); }
};

GridDocument to_document(const JointDegreeMatrix& mat);
GridDocument to_document(const StationaryGrid& grid);
GridDocument to_document(const EdgeStateDistribution& dist);
StationaryGrid to_stationary(const GridDocument& doc);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

/// JSON layout:
///   {"kind", "mode", "m", "max_k", "tail_mass", ["edge_count"], ["replicas"], ["t"],
///    "entries": [[k1, k2, p], ...]}   (nonzero cells, row-major)
/// CSV layout: one `# key=value ...` metadata line, a header row
/// `k1\k2,<k2 values>`, then one row per k1 starting with the k1 value.
std::string render_grid(const GridDocument& doc, GridFormat format);
GridDocument parse_grid(std::string_view text, GridFormat format);

void write_grid(const std::filesystem::path& path, const GridDocument& doc, GridFormat format);
/// Format is taken from the extension (.json or .csv).
GridDocument read_grid(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

}  // namespace degcorr
