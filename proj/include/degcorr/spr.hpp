#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "degcorr/network.hpp"

namespace degcorr {

/// Per-class bookkeeping of one ensemble generation.
struct SprClassStats {
    std::size_t input = 0;      ///< networks in the class before the step
    std::size_t groups = 0;     ///< full groups of (i + 1) networks formed
    std::size_t carryover = 0;  ///< networks left ungrouped, kept unchanged
    std::size_t output = 0;     ///< networks delivered to class i + 1
};

/// Ensemble of networks partitioned by edge count. Only m = 1 is supported.
struct SprEnsemble {
    std::int64_t generation = 0;
    std::map<std::size_t, std::vector<Network>> buckets;
    /// Bookkeeping of the step that produced this generation, keyed by the
    /// input class i. Empty at generation 0.
    std::map<std::size_t, SprClassStats> last_step;

    std::size_t population() const;
};

/// One generation of the edge-recombination rule. For every class i the
/// networks are shuffled and cut into groups of i + 1; in each group one
/// network is dissolved into i isolated edges and each of the remaining i
/// networks absorbs one of them by joining a fresh degree-1 node to a
/// uniformly chosen node. Ungrouped networks stay in class i.
///
/// Randomness for class i comes from derive_seed(seed, {generation, i}), so
/// the result does not depend on the order in which classes are processed.
SprEnsemble spr_step(const SprEnsemble& ens, std::uint64_t seed, int m = 1);

/// `ensemble_size` copies of K_n0 advanced by `generations` steps.
SprEnsemble spr_run(int n0, std::int64_t generations, std::size_t ensemble_size, std::uint64_t seed, int m = 1);

}  // namespace degcorr
