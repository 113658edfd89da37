#pragma once

#include <span>
#include <vector>

#include "degcorr/estimators.hpp"
#include "degcorr/network.hpp"

namespace degcorr {

struct EnsembleParams {
    GrowthParams growth;  ///< replica_index is ignored; replicas are 0 .. replicas - 1
    int replicas = 1;
    Mode mode = Mode::undirected;
};

/// Statistics of one grown network.
struct ReplicaResult {
    JointDegreeMatrix matrix;
    CorrelationSummary neighbor_degree;
    DegreeHistogram histogram;
};

/// Grows and measures every replica, spreading replicas over `jobs` OpenMP
/// threads. Slot i always holds replica i.
std::vector<ReplicaResult> run_replicas(const EnsembleParams& params, int jobs = 0);

namespace reference {
std::vector<ReplicaResult> run_replicas(const EnsembleParams& params);
}

struct EnsembleSummary {
    JointDegreeMatrix merged;
    CorrelationSummary correlation;  ///< r from the merged matrix, knn pooled over replicas
    std::map<int, double> edge_knn;  ///< edge-based conditional mean from the merged matrix
    DegreeHistogram histogram;       ///< pooled node counts
};

/// Folds replica results in index order.
EnsembleSummary summarize(std::span<const ReplicaResult> results);

}  // namespace degcorr
