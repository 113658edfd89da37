#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "degcorr/rng.hpp"

namespace degcorr {

using NodeId = std::uint32_t;

/// An edge remembers which endpoint created it. For attachment edges the
/// creator is the newly added node; clique edges use the higher node id.
struct Edge {
    NodeId creator;
    NodeId target;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct GrowthParams {
    int m = 1;
    int n0 = 3;
    std::int64_t steps = 0;
    std::uint64_t seed = 0;
    std::uint64_t replica_index = 0;

    /// Throws invalid-parameter unless m >= 1, n0 >= m + 1 and steps >= 0.
    void validate() const;
};

/// Growing simple graph with per-node degrees and per-edge orientation.
class Network {
public:
    Network() = default;
    explicit Network(std::size_t node_count) : degrees_(node_count, 0) {}

    std::size_t node_count() const noexcept { return degrees_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    int degree(NodeId v) const noexcept { return degrees_[v]; }

    NodeId add_node();
    /// Appends an edge without checking for duplicates; see is_simple().
    void add_edge(NodeId creator, NodeId target);

    /// True when there are no self-loops and no duplicate unordered pairs.
    bool is_simple() const;

    friend bool operator==(const Network&, const Network&) = default;

private:
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
};

/// Complete graph K_n0 with every edge oriented from the higher id to the lower.
Network init_complete(int n0);

/// Adds one node joined to m distinct existing nodes drawn uniformly without
/// replacement. The new node is the creator of all m edges.
void grow_step(Network& net, int m, RandomStream& rng);

/// init_complete(n0) followed by `steps` growth steps using
/// replica_stream(seed, replica_index).
Network grow_run(const GrowthParams& params);

/// Uniform m-subset of {0, ..., n - 1} by Floyd's algorithm (no rejections).
/// The returned ids are in draw order.
std::vector<NodeId> sample_distinct(std::uint32_t n, int m, RandomStream& rng);

/// Edge-list text: header `# n0 m steps seed replica`, then one
/// `creator target` pair per line.
void write_edge_list(std::ostream& out, const Network& net, const GrowthParams& params);
Network read_edge_list(std::istream& in, GrowthParams* params = nullptr);

}  // namespace degcorr
