#include "degcorr/ensemble.hpp"

#include "degcorr/error.hpp"
#include "degcorr/parallel.hpp"

namespace degcorr {

namespace {

ReplicaResult measure_replica(const EnsembleParams& params, int index) {
    GrowthParams growth = params.growth;
    growth.replica_index = static_cast<std::uint64_t>(index);
    const Network net = grow_run(growth);
    return {joint_degree_matrix(net, params.mode, growth.m), average_neighbor_degree(net), degree_histogram(net)};
}

void validate(const EnsembleParams& params) {
    params.growth.validate();
    require(params.replicas >= 1, ErrorKind::invalid_parameter, "need at least one replica");
}

}  // namespace

std::vector<ReplicaResult> run_replicas(const EnsembleParams& params, int jobs) {
    validate(params);
    std::vector<ReplicaResult> results(static_cast<std::size_t>(params.replicas));
    const int threads = resolve_jobs(jobs);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads != 1)
    for (int i = 0; i < params.replicas; ++i) results[static_cast<std::size_t>(i)] = measure_replica(params, i);
    return results;
}

namespace reference {

std::vector<ReplicaResult> run_replicas(const EnsembleParams& params) {
    validate(params);
    std::vector<ReplicaResult> results;
    results.reserve(static_cast<std::size_t>(params.replicas));
    for (int i = 0; i < params.replicas; ++i) results.push_back(measure_replica(params, i));
    return results;
}

}  // namespace reference

EnsembleSummary summarize(std::span<const ReplicaResult> results) {
    require(!results.empty(), ErrorKind::empty_input, "no replica results");
    std::vector<JointDegreeMatrix> matrices;
    std::vector<CorrelationSummary> knns;
    matrices.reserve(results.size());
    knns.reserve(results.size());
    EnsembleSummary summary;
    for (const auto& r : results) {
        matrices.push_back(r.matrix);
        knns.push_back(r.neighbor_degree);
        for (const auto& [k, count] : r.histogram.counts) summary.histogram.counts[k] += count;
        summary.histogram.total_nodes += r.histogram.total_nodes;
    }
    summary.merged = merge_matrices(matrices);
    summary.correlation = pearson_r(summary.merged);
    const CorrelationSummary pooled = merge_neighbor_degree(knns);
    summary.correlation.knn = pooled.knn;
    summary.correlation.knn_support = pooled.knn_support;
    summary.edge_knn = edge_conditional_knn(summary.merged.probabilities);
    return summary;
}

}  // namespace degcorr
