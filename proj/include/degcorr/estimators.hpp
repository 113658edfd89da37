#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "degcorr/degree_matrix.hpp"
#include "degcorr/edge_state.hpp"
#include "degcorr/network.hpp"

namespace degcorr {

/// Node counts per degree. Counts are real so that expected counts
/// reconstructed from edge-state probabilities fit the same type.
struct DegreeHistogram {
    std::map<int, double> counts;
    double total_nodes = 0.0;
};

/// Empirical edge-endpoint degree distribution of one or more networks.
struct JointDegreeMatrix {
    int m = 1;
    DegreeMatrix probabilities;
    std::uint64_t edge_count = 0;
    int replicas_merged = 1;

    Mode mode() const noexcept { return probabilities.mode(); }
};

/// First and second moments of (k_i, k_j) over the ordered-pair ensemble.
struct PairMoments {
    double mean_i = 0.0;
    double mean_j = 0.0;
    double mean_ij = 0.0;
    double mean_ii = 0.0;
    double mean_jj = 0.0;
};

struct CorrelationSummary {
    /// Empty when either endpoint degree has zero variance.
    std::optional<double> pearson_r;
    std::map<int, double> knn;
    /// Number of nodes (or, for edge-based estimates, endpoint mass) behind each knn entry.
    std::map<int, double> knn_support;
    PairMoments moments;
};

DegreeHistogram degree_histogram(const Network& net);

/// Directed: one count per edge at (deg(creator), deg(target)).
/// Undirected: one count per edge at (min, max).
JointDegreeMatrix joint_degree_matrix(const Network& net, Mode mode, int m);

/// Edge-count-weighted average, folded in the order given.
JointDegreeMatrix merge_matrices(std::span<const JointDegreeMatrix> parts);

/// Pearson coefficient of endpoint degrees. Undirected tables are symmetrized
/// first; directed tables use each (creator, target) pair once. Moments are
/// normalized by the table's own mass, so truncated theory grids work too.
CorrelationSummary pearson_r(const DegreeMatrix& table);
CorrelationSummary pearson_r(const JointDegreeMatrix& mat);

/// knn(k) = (1/N_k) sum_{i: k_i = k} (1/k_i) sum_{j in nbr(i)} k_j.
CorrelationSummary average_neighbor_degree(const Network& net);

/// Pool several per-network knn results, weighting each by its node support.
CorrelationSummary merge_neighbor_degree(std::span<const CorrelationSummary> parts);

/// Edge-based conditional mean neighbour degree sum_k' k' P(k' | k), with both
/// endpoints of every edge treated alike.
std::map<int, double> edge_conditional_knn(const DegreeMatrix& table);

/// Expected node counts from edge-state probabilities by endpoint counting:
///   directed    N_k = E * (row_k + col_k) / k
///   undirected  N_k = E * (sum_{k' != k} P(k, k') + 2 P(k, k)) / k
/// where E is the number of edges the probabilities describe.
DegreeHistogram node_counts(const DegreeMatrix& table, double edges);
DegreeHistogram node_counts_from_edge_dist(const EdgeStateDistribution& dist);
DegreeHistogram node_counts_from_matrix(const JointDegreeMatrix& mat);

}  // namespace degcorr
