#include "degcorr/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "degcorr/error.hpp"

namespace degcorr {

DegreeHistogram degree_histogram(const Network& net) {
    DegreeHistogram hist;
    for (int k : net.degrees()) hist.counts[k] += 1.0;
    hist.total_nodes = static_cast<double>(net.node_count());
    return hist;
}

JointDegreeMatrix joint_degree_matrix(const Network& net, Mode mode, int m) {
    require(net.edge_count() > 0, ErrorKind::empty_input, "network has no edges");
    const auto& deg = net.degrees();
    const int max_deg = *std::max_element(deg.begin(), deg.end());

    DegreeMatrix counts(mode, max_deg);
    for (const Edge& e : net.edges()) {
        int a = deg[e.creator];
        int b = deg[e.target];
        if (mode == Mode::undirected && a > b) std::swap(a, b);
        counts(a, b) += 1.0;
    }
    const double edges = static_cast<double>(net.edge_count());
    DegreeMatrix probs(mode, max_deg);
    for (int a = 0; a <= max_deg; ++a)
        for (int b = 0; b <= max_deg; ++b) probs(a, b) = counts(a, b) / edges;

    JointDegreeMatrix mat;
    mat.m = m;
    mat.probabilities = std::move(probs);
    mat.edge_count = net.edge_count();
    return mat;
}

JointDegreeMatrix merge_matrices(std::span<const JointDegreeMatrix> parts) {
    require(!parts.empty(), ErrorKind::empty_input, "nothing to merge");
    const Mode mode = parts.front().mode();
    const int m = parts.front().m;
    int max_deg = 0;
    std::uint64_t total_edges = 0;
    int replicas = 0;
    for (const auto& part : parts) {
        require(part.mode() == mode && part.m == m, ErrorKind::incompatible_inputs,
                "cannot merge matrices with different mode or m");
        max_deg = std::max(max_deg, part.probabilities.max_degree());
        total_edges += part.edge_count;
        replicas += part.replicas_merged;
    }
    require(total_edges > 0, ErrorKind::empty_input, "merged matrices carry no edges");

    std::vector<CompensatedSum> acc(static_cast<std::size_t>(max_deg + 1) * static_cast<std::size_t>(max_deg + 1));
    for (const auto& part : parts) {
        const double weight = static_cast<double>(part.edge_count);
        const int d = part.probabilities.max_degree();
        for (int a = 0; a <= d; ++a)
            for (int b = 0; b <= d; ++b) {
                const double p = part.probabilities(a, b);
                if (p != 0.0) acc[static_cast<std::size_t>(a) * (max_deg + 1) + b] += p * weight;
            }
    }
    JointDegreeMatrix merged;
    merged.m = m;
    merged.probabilities = DegreeMatrix(mode, max_deg);
    const double denom = static_cast<double>(total_edges);
    for (int a = 0; a <= max_deg; ++a)
        for (int b = 0; b <= max_deg; ++b)
            merged.probabilities(a, b) = acc[static_cast<std::size_t>(a) * (max_deg + 1) + b].value() / denom;
    merged.edge_count = total_edges;
    merged.replicas_merged = replicas;
    return merged;
}

CorrelationSummary pearson_r(const DegreeMatrix& table) {
    const int d = table.max_degree();
    CompensatedSum mass, si, sj;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; b <= d; ++b) {
            const double p = table.ordered_pair(a, b);
            mass += p;
            si += p * a;
            sj += p * b;
        }
    CorrelationSummary out;
    const double total = mass.value();
    if (total <= 0.0) return out;
    const double mu_i = si.value() / total;
    const double mu_j = sj.value() / total;

    CompensatedSum sij, sii, sjj, cov, var_i, var_j;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; b <= d; ++b) {
            const double p = table.ordered_pair(a, b);
            if (p == 0.0) continue;
            sij += p * a * b;
            sii += p * a * a;
            sjj += p * b * b;
            cov += p * (a - mu_i) * (b - mu_j);
            var_i += p * (a - mu_i) * (a - mu_i);
            var_j += p * (b - mu_j) * (b - mu_j);
        }
    out.moments = {mu_i, mu_j, sij.value() / total, sii.value() / total, sjj.value() / total};

    const double vi = var_i.value() / total;
    const double vj = var_j.value() / total;
    // relative floor: integer-valued degrees give exact zeros for regular inputs
    const double floor_i = 1e-14 * out.moments.mean_ii;
    const double floor_j = 1e-14 * out.moments.mean_jj;
    if (vi <= floor_i || vj <= floor_j) return out;
    const double r = (cov.value() / total) / std::sqrt(vi * vj);
    out.pearson_r = std::clamp(r, -1.0, 1.0);
    return out;
}

CorrelationSummary pearson_r(const JointDegreeMatrix& mat) { return pearson_r(mat.probabilities); }

CorrelationSummary average_neighbor_degree(const Network& net) {
    const auto& deg = net.degrees();
    std::vector<double> nbr_sum(net.node_count(), 0.0);
    for (const Edge& e : net.edges()) {
        nbr_sum[e.creator] += deg[e.target];
        nbr_sum[e.target] += deg[e.creator];
    }
    std::map<int, double> per_degree;
    std::map<int, double> support;
    for (std::size_t i = 0; i < net.node_count(); ++i) {
        const int k = deg[i];
        if (k == 0) continue;
        per_degree[k] += nbr_sum[i] / k;
        support[k] += 1.0;
    }
    CorrelationSummary out;
    for (const auto& [k, total] : per_degree) out.knn[k] = total / support[k];
    out.knn_support = std::move(support);
    return out;
}

CorrelationSummary merge_neighbor_degree(std::span<const CorrelationSummary> parts) {
    std::map<int, double> weighted;
    std::map<int, double> support;
    for (const auto& part : parts)
        for (const auto& [k, value] : part.knn) {
            const auto it = part.knn_support.find(k);
            const double w = it == part.knn_support.end() ? 1.0 : it->second;
            weighted[k] += value * w;
            support[k] += w;
        }
    CorrelationSummary out;
    for (const auto& [k, total] : weighted) out.knn[k] = total / support[k];
    out.knn_support = std::move(support);
    return out;
}

std::map<int, double> edge_conditional_knn(const DegreeMatrix& table) {
    const int d = table.max_degree();
    std::vector<double> weight(static_cast<std::size_t>(d) + 1, 0.0);
    std::vector<double> moment(static_cast<std::size_t>(d) + 1, 0.0);
    for (int a = 0; a <= d; ++a)
        for (int b = 0; b <= d; ++b) {
            const double p = table(a, b);
            if (p == 0.0) continue;
            weight[a] += p;
            moment[a] += p * b;
            weight[b] += p;
            moment[b] += p * a;
        }
    std::map<int, double> knn;
    for (int k = 0; k <= d; ++k)
        if (weight[k] > 0.0) knn[k] = moment[k] / weight[k];
    return knn;
}

DegreeHistogram node_counts(const DegreeMatrix& table, double edges) {
    const int d = table.max_degree();
    std::vector<CompensatedSum> endpoints(static_cast<std::size_t>(d) + 1);
    for (int a = 0; a <= d; ++a)
        for (int b = 0; b <= d; ++b) {
            const double p = table(a, b);
            if (p == 0.0) continue;
            endpoints[a] += p;
            endpoints[b] += p;
        }
    require(endpoints[0].value() == 0.0, ErrorKind::invalid_state, "edge-state table has mass at degree 0");
    DegreeHistogram hist;
    for (int k = 1; k <= d; ++k) {
        const double share = endpoints[k].value();
        if (share == 0.0) continue;
        const double count = edges * share / k;
        hist.counts[k] = count;
        hist.total_nodes += count;
    }
    return hist;
}

DegreeHistogram node_counts_from_edge_dist(const EdgeStateDistribution& dist) {
    return node_counts(dist.entries, static_cast<double>(dist.current_edges()));
}

DegreeHistogram node_counts_from_matrix(const JointDegreeMatrix& mat) {
    return node_counts(mat.probabilities, static_cast<double>(mat.edge_count));
}

}  // namespace degcorr
