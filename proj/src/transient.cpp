#include "degcorr/transient.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "degcorr/error.hpp"
#include "degcorr/estimators.hpp"
#include "degcorr/parallel.hpp"

namespace degcorr {

namespace {

void check_normalized(const EdgeStateDistribution& dist) {
    const double mass = dist.entries.total() + dist.tail_mass;
    require(std::abs(mass - 1.0) <= 1e-9, ErrorKind::invalid_state,
            "edge-state distribution is not normalized (mass " + std::to_string(mass) + ")");
}

/// N_k / N for k = 0 .. max_k, reconstructed from the current distribution.
std::vector<double> node_fractions(const EdgeStateDistribution& dist) {
    const DegreeHistogram hist = node_counts_from_edge_dist(dist);
    std::vector<double> frac(static_cast<std::size_t>(dist.max_k()) + 1, 0.0);
    const double N = static_cast<double>(dist.node_count);
    for (const auto& [k, count] : hist.counts) frac[static_cast<std::size_t>(k)] = count / N;
    return frac;
}

/// Mass that the boundary cells push beyond the window through the
/// non-isolated branches.
double boundary_outflow(const DegreeMatrix& p, const KernelWeights& w) {
    const int top = p.max_degree();
    CompensatedSum out;
    auto visit = [&](int a, int b) {
        const double mass = p(a, b);
        if (mass == 0.0) return;
        double leaving = 0.0;
        if (a == top) leaving += w.single;
        if (b == top) leaving += w.single;
        if (a == top || b == top) leaving += w.both;
        out += mass * leaving;
    };
    for (int k = 0; k <= top; ++k) {
        visit(k, top);
        if (k != top && p.mode() == Mode::directed) visit(top, k);
    }
    return out.value();
}

EdgeStateDistribution advance_header(const EdgeStateDistribution& dist) {
    EdgeStateDistribution next;
    next.m = dist.m;
    next.t = dist.t + 1;
    next.edges_after_step = dist.edges_after_step + dist.m;
    next.node_count = dist.node_count + 1;
    next.entries = DegreeMatrix(dist.mode(), dist.max_k());
    return next;
}

double isolated_beyond(const std::vector<double>& frac, const KernelWeights& w) {
    CompensatedSum inside;
    for (std::size_t j = 0; j + 1 < frac.size(); ++j) inside += frac[j];
    return w.isolated * std::max(0.0, 1.0 - inside.value());
}

}  // namespace

EdgeStateDistribution transient_initial(Mode mode, int m, int n0, int max_k) {
    GrowthParams{m, n0, 0, 0, 0}.validate();
    EdgeStateDistribution dist;
    dist.m = m;
    dist.t = 0;
    dist.edges_after_step = std::int64_t{n0} * (n0 - 1) / 2 + m;
    dist.node_count = n0;
    dist.entries = DegreeMatrix(mode, std::max(max_k, n0));
    dist.entries(n0 - 1, n0 - 1) = 1.0;
    return dist;
}

EdgeStateDistribution transient_step(const EdgeStateDistribution& dist, int jobs) {
    check_normalized(dist);
    const KernelWeights w = kernel_weights(dist.edges_after_step, dist.node_count, dist.m);
    const std::vector<double> frac = node_fractions(dist);
    const DegreeMatrix& p = dist.entries;
    const int top = p.max_degree();
    const int m = dist.m;
    const bool directed = p.mode() == Mode::directed;

    EdgeStateDistribution next = advance_header(dist);
    DegreeMatrix& q = next.entries;
    const int threads = resolve_jobs(jobs);

#pragma omp parallel for schedule(static) num_threads(threads) if (threads != 1)
    for (int k1 = 0; k1 <= top; ++k1) {
        for (int k2 = directed ? 0 : k1; k2 <= top; ++k2) {
            double v = w.stay * p(k1, k2);
            if (directed || k1 < k2) {
                // creator/lighter endpoint hit, other endpoint hit, both hit
                v += w.single * p.get(k1 - 1, k2);
                const double from_left = w.single * p.get(k1, k2 - 1);
                v += (!directed && k2 - 1 == k1) ? 2.0 * from_left : from_left;
                v += w.both * p.get(k1 - 1, k2 - 1);
            } else {
                v += w.single * p.get(k1 - 1, k1);
                v += w.both * p.get(k1 - 1, k1 - 1);
            }
            // new edges enter at (m, k') where the target had degree k' - 1
            if (k1 == m && k2 >= 1) v += w.isolated * frac[static_cast<std::size_t>(k2 - 1)];
            if (!directed && k2 == m && k1 < m && k1 >= 1) v += w.isolated * frac[static_cast<std::size_t>(k1 - 1)];
            q(k1, k2) = v;
        }
    }

    next.tail_mass = (w.stay + 2.0 * w.single + w.both) * dist.tail_mass + boundary_outflow(p, w) +
                     isolated_beyond(frac, w);
    return next;
}

EdgeStateDistribution transient_step_directed(const EdgeStateDistribution& dist, int jobs) {
    require(dist.mode() == Mode::directed, ErrorKind::invalid_state, "expected a directed distribution");
    return transient_step(dist, jobs);
}

EdgeStateDistribution transient_step_undirected(const EdgeStateDistribution& dist, int jobs) {
    require(dist.mode() == Mode::undirected, ErrorKind::invalid_state, "expected an undirected distribution");
    return transient_step(dist, jobs);
}

namespace reference {

EdgeStateDistribution transient_step(const EdgeStateDistribution& dist) {
    check_normalized(dist);
    const KernelWeights w = kernel_weights(dist.edges_after_step, dist.node_count, dist.m);
    const DegreeHistogram hist = node_counts_from_edge_dist(dist);
    const DegreeMatrix& p = dist.entries;
    const int top = p.max_degree();
    const bool undirected = p.mode() == Mode::undirected;

    EdgeStateDistribution next = advance_header(dist);
    double tail = 0.0;
    auto deposit = [&](int a, int b, double mass) {
        if (undirected && a > b) std::swap(a, b);
        if (a > top || b > top)
            tail += mass;
        else
            next.entries(a, b) += mass;
    };

    double source_mass = dist.tail_mass;
    for (int a = 0; a <= top; ++a)
        for (int b = 0; b <= top; ++b) {
            const double mass = p(a, b);
            if (mass == 0.0) continue;
            source_mass += mass;
            deposit(a, b, mass * w.stay);
            deposit(a + 1, b, mass * w.single);
            deposit(a, b + 1, mass * w.single);
            deposit(a + 1, b + 1, mass * w.both);
        }
    tail += dist.tail_mass * (w.stay + 2.0 * w.single + w.both);

    const double isolated = source_mass * w.isolated;
    const double N = static_cast<double>(dist.node_count);
    double placed = 0.0;
    for (const auto& [k, count] : hist.counts) {
        deposit(dist.m, k + 1, isolated * (count / N));
        placed += count / N;
    }
    tail += isolated * std::max(0.0, 1.0 - placed);
    next.tail_mass = tail;
    return next;
}

}  // namespace reference

EdgeStateDistribution transient_run(Mode mode, int m, int n0, std::int64_t steps, const TransientOptions& options,
                                    const std::function<void(const EdgeStateDistribution&)>& observer) {
    require(steps >= 0, ErrorKind::invalid_parameter, "steps must be non-negative");
    EdgeStateDistribution dist = transient_initial(mode, m, n0, options.max_k);
    if (observer) observer(dist);
    for (std::int64_t s = 0; s < steps; ++s) {
        const int top = dist.max_k();
        CompensatedSum boundary;
        for (int k = 0; k <= top; ++k) {
            boundary += dist.entries(k, top);
            if (k != top) boundary += dist.entries(top, k);
        }
        if (boundary.value() > options.tail_epsilon) dist.entries.resize(top + std::max(8, top / 2));
        dist = transient_step(dist, options.jobs);
        if (observer) observer(dist);
    }
    return dist;
}

DegreeMatrix asymptotic_step(const StationaryGrid& grid) {
    const DegreeMatrix& p = grid.entries;
    const int top = p.max_degree();
    const int m = grid.m;
    const double c = static_cast<double>(m) / (2.0 * m + 1.0);
    const double feed = 1.0 / (2.0 * m + 1.0);
    const bool directed = p.mode() == Mode::directed;

    // N_k / N -> m * (endpoint share of k) / k once L / N -> m
    std::vector<double> law(static_cast<std::size_t>(top) + 1, 0.0);
    for (int a = 0; a <= top; ++a)
        for (int b = 0; b <= top; ++b) {
            law[a] += p(a, b);
            law[b] += p(a, b);
        }
    for (int k = 1; k <= top; ++k) law[k] *= static_cast<double>(m) / k;

    DegreeMatrix out(p.mode(), top);
    for (int k1 = 0; k1 <= top; ++k1)
        for (int k2 = directed ? 0 : k1; k2 <= top; ++k2) {
            double v = 0.0;
            if (directed || k1 < k2) {
                v += c * p.get(k1 - 1, k2);
                const double from_left = c * p.get(k1, k2 - 1);
                v += (!directed && k2 - 1 == k1) ? 2.0 * from_left : from_left;
            } else {
                v += c * p.get(k1 - 1, k1);
            }
            if (k1 == m && k2 >= 1) v += feed * law[static_cast<std::size_t>(k2 - 1)];
            out(k1, k2) = v;
        }
    return out;
}

double sup_distance(const DegreeMatrix& a, const DegreeMatrix& b) {
    require(a.mode() == b.mode(), ErrorKind::incompatible_inputs, "tables have different modes");
    const int top = std::max(a.max_degree(), b.max_degree());
    double worst = 0.0;
    for (int k1 = 0; k1 <= top; ++k1)
        for (int k2 = 0; k2 <= top; ++k2) worst = std::max(worst, std::abs(a.get(k1, k2) - b.get(k1, k2)));
    return worst;
}

}  // namespace degcorr
