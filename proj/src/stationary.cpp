#include <algorithm>
#include <string>

#include "degcorr/error.hpp"
#include "degcorr/theory.hpp"

namespace degcorr {

namespace {

void check_window(int m, int max_k) {
    require(m >= 1, ErrorKind::invalid_parameter, "m must be at least 1");
    require(max_k > m + 1, ErrorKind::invalid_parameter,
            "max_k must exceed m + 1 (got max_k=" + std::to_string(max_k) + ")");
}

double truncated_mass(const DegreeMatrix& entries) { return std::max(0.0, 1.0 - entries.total()); }

}  // namespace

// Rows are filled in increasing k1, columns in increasing k2; every entry
// depends only on its left and upper neighbours.
StationaryGrid stationary_directed(int m, int max_k) {
    check_window(m, max_k);
    const double c = static_cast<double>(m) / (2.0 * m + 1.0);
    const double feed = 1.0 / (2.0 * m + 1.0);

    DegreeMatrix p(Mode::directed, max_k);
    p(m, m) = 0.0;
    for (int k2 = m + 1; k2 <= max_k; ++k2)
        p(m, k2) = c * p(m, k2 - 1) + feed * exponential_degree_dist(m, k2 - 1);
    for (int k1 = m + 1; k1 <= max_k; ++k1) {
        p(k1, m) = c * p(k1 - 1, m);
        for (int k2 = m + 1; k2 <= max_k; ++k2) p(k1, k2) = c * (p(k1 - 1, k2) + p(k1, k2 - 1));
    }
    StationaryGrid grid{m, std::move(p), 0.0};
    grid.tail_mass = truncated_mass(grid.entries);
    return grid;
}

StationaryGrid stationary_undirected(int m, int max_k) {
    check_window(m, max_k);
    const double c = static_cast<double>(m) / (2.0 * m + 1.0);
    const double feed = 1.0 / (2.0 * m + 1.0);

    DegreeMatrix p(Mode::undirected, max_k);
    p(m, m) = 0.0;
    for (int k2 = m + 1; k2 <= max_k; ++k2)
        p(m, k2) = c * p(m, k2 - 1) + feed * exponential_degree_dist(m, k2 - 1);
    for (int k1 = m + 1; k1 <= max_k; ++k1) {
        // the diagonal is reached only through its lighter endpoint
        p(k1, k1) = c * p(k1 - 1, k1);
        if (k1 + 1 <= max_k) p(k1, k1 + 1) = c * p(k1 - 1, k1 + 1) + 2.0 * c * p(k1, k1);
        for (int k2 = k1 + 2; k2 <= max_k; ++k2) p(k1, k2) = c * (p(k1 - 1, k2) + p(k1, k2 - 1));
    }
    StationaryGrid grid{m, std::move(p), 0.0};
    grid.tail_mass = truncated_mass(grid.entries);
    return grid;
}

StationaryGrid stationary(Mode mode, int m, int max_k) {
    return mode == Mode::directed ? stationary_directed(m, max_k) : stationary_undirected(m, max_k);
}

StationaryGrid stationary_adaptive(const TheoryParams& params) {
    constexpr int kWindowLimit = 8192;
    int max_k = std::max(params.max_k, params.m + 2);
    for (;;) {
        StationaryGrid grid = stationary(params.mode, params.m, max_k);
        if (grid.tail_mass < params.tail_epsilon) return grid;
        require(max_k < kWindowLimit, ErrorKind::invalid_parameter,
                "tail tolerance " + std::to_string(params.tail_epsilon) + " not reachable below max_k=" +
                    std::to_string(kWindowLimit));
        max_k = std::min(kWindowLimit, max_k + max_k / 2);
    }
}

std::optional<double> grid_r(const StationaryGrid& grid) { return pearson_r(grid.entries).pearson_r; }

std::map<int, double> grid_knn(const StationaryGrid& grid) { return edge_conditional_knn(grid.entries); }

double tail_mass(const StationaryGrid& grid) { return grid.tail_mass; }

double tail_mass(const EdgeStateDistribution& dist) { return dist.tail_mass; }

}  // namespace degcorr
