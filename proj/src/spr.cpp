#include "degcorr/spr.hpp"

#include <string>
#include <utility>

#include "degcorr/error.hpp"
#include "degcorr/rng.hpp"

namespace degcorr {

namespace {

void require_unit_m(int m) {
    require(m == 1, ErrorKind::unsupported_mode,
            "the recombination ensemble is defined for m = 1 only (got m=" + std::to_string(m) + ")");
}

template <class T>
void shuffle(std::vector<T>& items, RandomStream& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace

std::size_t SprEnsemble::population() const {
    std::size_t total = 0;
    for (const auto& [edges, nets] : buckets) total += nets.size();
    return total;
}

SprEnsemble spr_step(const SprEnsemble& ens, std::uint64_t seed, int m) {
    require_unit_m(m);
    SprEnsemble next;
    next.generation = ens.generation + 1;

    for (const auto& [edge_class, nets] : ens.buckets) {
        for (const Network& net : nets)
            require(net.edge_count() == edge_class, ErrorKind::invalid_state,
                    "bucket " + std::to_string(edge_class) + " holds a network with " +
                        std::to_string(net.edge_count()) + " edges");
        if (nets.empty()) continue;

        RandomStream rng(derive_seed(seed, {static_cast<std::uint64_t>(ens.generation), edge_class}));
        const std::size_t group_size = edge_class + 1;

        std::vector<std::size_t> order(nets.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        shuffle(order, rng);

        SprClassStats stats;
        stats.input = nets.size();
        stats.groups = nets.size() / group_size;
        stats.carryover = nets.size() % group_size;
        stats.output = stats.groups * edge_class;

        for (std::size_t g = 0; g < stats.groups; ++g) {
            auto& promoted = next.buckets[edge_class + 1];
            const std::size_t base = g * group_size;
            const auto dissolved = static_cast<std::size_t>(rng.below(group_size));
            // detached edges are interchangeable; each survivor absorbs one
            for (std::size_t s = 0; s < group_size; ++s) {
                if (s == dissolved) continue;
                Network grown = nets[order[base + s]];
                const auto anchor = static_cast<NodeId>(rng.below(grown.node_count()));
                const NodeId fresh = grown.add_node();
                grown.add_edge(fresh, anchor);
                promoted.push_back(std::move(grown));
            }
        }
        if (stats.carryover > 0) {
            auto& kept = next.buckets[edge_class];
            for (std::size_t r = stats.groups * group_size; r < nets.size(); ++r) kept.push_back(nets[order[r]]);
        }
        next.last_step[edge_class] = stats;
    }
    return next;
}

SprEnsemble spr_run(int n0, std::int64_t generations, std::size_t ensemble_size, std::uint64_t seed, int m) {
    require_unit_m(m);
    require(n0 >= m + 1, ErrorKind::invalid_parameter, "n0 must be at least m + 1");
    require(generations >= 0, ErrorKind::invalid_parameter, "generations must be non-negative");
    const std::size_t clique_edges = static_cast<std::size_t>(n0) * static_cast<std::size_t>(n0 - 1) / 2;
    require(ensemble_size >= clique_edges + 1, ErrorKind::invalid_parameter,
            "ensemble must hold at least one full group of " + std::to_string(clique_edges + 1) + " networks");

    SprEnsemble ens;
    ens.buckets[clique_edges] = std::vector<Network>(ensemble_size, init_complete(n0));
    for (std::int64_t g = 0; g < generations; ++g) ens = spr_step(ens, seed, m);
    return ens;
}

}  // namespace degcorr
