#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "degcorr/degree_matrix.hpp"
#include "degcorr/edge_state.hpp"
#include "degcorr/estimators.hpp"

namespace degcorr {

struct TheoryParams {
    int m = 1;
    int max_k = 60;
    double tail_epsilon = 1e-10;
    Mode mode = Mode::undirected;
};

/// Stationary degree law of the uniform-attachment growth model:
/// P(k) = (1/(m+1)) (m/(m+1))^(k-m) for k >= m.
double exponential_degree_dist(int m, int k);

struct DegreePair {
    int k1 = 0;
    int k2 = 0;
    auto operator<=>(const DegreePair&) const = default;
};

/// Scalar one-step weights of an existing edge in a network with
/// L - m edges and N nodes that receives one new node with m edges.
///   stay    (L-m)/L * C(N-2, m)   / C(N, m)
///   single  (L-m)/L * C(N-2, m-1) / C(N, m)   (one given endpoint hit)
///   both    (L-m)/L * C(N-2, m-2) / C(N, m)
///   isolated  m/L                              (the edge is one of the new ones)
/// Binomial ratios are evaluated as products of ratios.
struct KernelWeights {
    double stay = 0.0;
    double single = 0.0;
    double both = 0.0;
    double isolated = 0.0;

    double total() const noexcept { return stay + 2.0 * single + both + isolated; }
};

KernelWeights kernel_weights(std::int64_t edges_after_step, std::int64_t node_count, int m);

struct OneStepTransition {
    std::map<DegreePair, double> successors;
    /// Total weight of the isolated branch (m / L), spread over (m, k').
    double isolated_total = 0.0;
};

/// Successor distribution of one directed edge state. The isolated branch is
/// distributed over (m, k') in proportion to node_counts[k' - 1] / N.
OneStepTransition one_step_transition_directed(DegreePair state, std::int64_t edges_after_step,
                                               std::int64_t node_count, int m,
                                               const DegreeHistogram& node_counts);

/// Fixed point of the directed chain on [m, max_k]^2.
StationaryGrid stationary_directed(int m, int max_k);
/// Fixed point of the undirected chain, upper triangle of [m, max_k]^2.
StationaryGrid stationary_undirected(int m, int max_k);
StationaryGrid stationary(Mode mode, int m, int max_k);

/// Stationary grid whose window is widened (starting from params.max_k) until
/// the truncated mass falls below params.tail_epsilon.
StationaryGrid stationary_adaptive(const TheoryParams& params);

/// Generating function of one row of the stationary table: coefficient k is
/// the entry at column k. Undirected rows are the full symmetric row.
struct GFRow {
    int row = 0;
    int m = 1;
    std::vector<double> coefficients;

    double coefficient(int k) const noexcept {
        return k >= 0 && static_cast<std::size_t>(k) < coefficients.size() ? coefficients[k] : 0.0;
    }
    double value_at_one() const noexcept;
};

/// Row m from its closed-form double sum, truncated at x^max_k.
std::vector<double> gf_first_row(int m, int max_k);

/// G_r = (m / (2m + 1 - m x))^(r - m) G_m.
GFRow gf_row_directed(int m, int r, int max_k);
std::vector<GFRow> gf_rows_directed(int m, int rows, int max_k);

/// Rows m .. m + rows - 1 from the undirected correction-term recurrence.
std::vector<GFRow> gf_rows_undirected(int m, int rows, int max_k);

std::optional<double> grid_r(const StationaryGrid& grid);
std::map<int, double> grid_knn(const StationaryGrid& grid);
double tail_mass(const StationaryGrid& grid);
double tail_mass(const EdgeStateDistribution& dist);

}  // namespace degcorr
