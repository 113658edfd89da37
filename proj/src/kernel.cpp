#include <cmath>
#include <string>

#include "degcorr/error.hpp"
#include "degcorr/theory.hpp"

namespace degcorr {

double exponential_degree_dist(int m, int k) {
    require(m >= 1, ErrorKind::invalid_parameter, "m must be at least 1");
    require(k >= m, ErrorKind::invalid_parameter,
            "degree " + std::to_string(k) + " is below m=" + std::to_string(m));
    const double md = m;
    return std::pow(md / (md + 1.0), k - m) / (md + 1.0);
}

KernelWeights kernel_weights(std::int64_t edges_after_step, std::int64_t node_count, int m) {
    require(m >= 1, ErrorKind::invalid_parameter, "m must be at least 1");
    require(node_count >= m, ErrorKind::invalid_parameter,
            "N=" + std::to_string(node_count) + " is smaller than m=" + std::to_string(m));
    require(node_count >= 2, ErrorKind::invalid_parameter, "kernel needs at least two nodes");
    require(edges_after_step > m, ErrorKind::invalid_parameter, "L must exceed m");

    const double L = static_cast<double>(edges_after_step);
    const double N = static_cast<double>(node_count);
    const double md = m;
    const double persist = (L - md) / L;
    // C(N-2, m-j) / C(N, m) for j = 0, 1, 2
    const double none_hit = ((N - md) / N) * ((N - md - 1.0) / (N - 1.0));
    const double one_hit = (md / N) * ((N - md) / (N - 1.0));
    const double two_hit = (md / N) * ((md - 1.0) / (N - 1.0));

    KernelWeights w;
    w.stay = persist * none_hit;
    w.single = persist * one_hit;
    w.both = persist * two_hit;
    w.isolated = md / L;
    return w;
}

OneStepTransition one_step_transition_directed(DegreePair state, std::int64_t edges_after_step,
                                               std::int64_t node_count, int m,
                                               const DegreeHistogram& node_counts) {
    require(state.k1 >= 1 && state.k2 >= 1, ErrorKind::invalid_parameter, "edge endpoints need degree >= 1");
    const KernelWeights w = kernel_weights(edges_after_step, node_count, m);

    OneStepTransition out;
    out.successors[state] += w.stay;
    out.successors[{state.k1 + 1, state.k2}] += w.single;
    out.successors[{state.k1, state.k2 + 1}] += w.single;
    if (w.both != 0.0) out.successors[{state.k1 + 1, state.k2 + 1}] += w.both;

    out.isolated_total = w.isolated;
    const double N = static_cast<double>(node_count);
    for (const auto& [k, count] : node_counts.counts)
        if (count != 0.0) out.successors[{m, k + 1}] += w.isolated * (count / N);
    return out;
}

}  // namespace degcorr
