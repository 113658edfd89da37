#pragma once

#include <cstdint>

#include "degcorr/degree_matrix.hpp"

namespace degcorr {

/// Time-indexed probability over edge states (k1, k2) of the growing network.
///
/// `edges_after_step` is L: the current network has L - m edges and
/// `node_count` (N) nodes, and the next growth step brings it to L edges.
/// Mass that has left the degree window is kept in `tail_mass`.
struct EdgeStateDistribution {
    int m = 1;
    std::int64_t t = 0;
    std::int64_t edges_after_step = 0;
    std::int64_t node_count = 0;
    DegreeMatrix entries;
    double tail_mass = 0.0;

    Mode mode() const noexcept { return entries.mode(); }
    int max_k() const noexcept { return entries.max_degree(); }
    std::int64_t current_edges() const noexcept { return edges_after_step - m; }
};

/// Truncated fixed point P(k1, k2) on [m, max_k]^2 (undirected: upper triangle).
struct StationaryGrid {
    int m = 1;
    DegreeMatrix entries;
    double tail_mass = 0.0;

    Mode mode() const noexcept { return entries.mode(); }
    int max_k() const noexcept { return entries.max_degree(); }
};

}  // namespace degcorr
