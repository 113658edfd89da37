#pragma once

#include <cstdint>
#include <functional>

#include "degcorr/edge_state.hpp"
#include "degcorr/theory.hpp"

namespace degcorr {

/// Point mass at (n0 - 1, n0 - 1) for the K_n0 start: L - m = n0(n0-1)/2, N = n0.
/// The window is [0, max(max_k, n0)].
EdgeStateDistribution transient_initial(Mode mode, int m, int n0, int max_k);

/// One step of the edge-state chain, written per destination cell from the
/// case equations and parallelized over rows with OpenMP. `jobs` <= 0 uses
/// the OpenMP default. Results do not depend on the thread count.
///
/// Node counts N_k are reconstructed from the current distribution by
/// endpoint counting. Mass that would leave the window is added to tail_mass,
/// and the tail itself is carried along (it still feeds the isolated branch).
EdgeStateDistribution transient_step(const EdgeStateDistribution& dist, int jobs = 0);
EdgeStateDistribution transient_step_directed(const EdgeStateDistribution& dist, int jobs = 0);
EdgeStateDistribution transient_step_undirected(const EdgeStateDistribution& dist, int jobs = 0);

namespace reference {

/// Serial scatter formulation: every source state pushes its mass through the
/// one-step kernel; undirected successors are folded to (min, max).
EdgeStateDistribution transient_step(const EdgeStateDistribution& dist);

}  // namespace reference

struct TransientOptions {
    int max_k = 60;
    double tail_epsilon = 1e-10;
    int jobs = 0;
};

/// Iterates transient_step `steps` times from transient_initial. Before each
/// step the window is widened whenever the mass on its outer boundary exceeds
/// tail_epsilon. `observer` (if set) sees every distribution, including t = 0.
EdgeStateDistribution transient_run(Mode mode, int m, int n0, std::int64_t steps, const TransientOptions& options,
                                    const std::function<void(const EdgeStateDistribution&)>& observer = {});

/// Limit of the one-step map as L, N grow without bound (coefficients
/// m/(2m+1) and 1/(2m+1)), with the degree law reconstructed from the grid
/// itself by endpoint counting. A stationary grid is a fixed point.
DegreeMatrix asymptotic_step(const StationaryGrid& grid);

/// Largest |a - b| over the union of both windows, reading undirected tables
/// as unordered pairs.
double sup_distance(const DegreeMatrix& a, const DegreeMatrix& b);

}  // namespace degcorr
