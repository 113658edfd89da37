#include "degcorr/network.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "degcorr/error.hpp"

namespace degcorr {

void GrowthParams::validate() const {
    require(m >= 1, ErrorKind::invalid_parameter, "m must be at least 1");
    require(n0 >= m + 1, ErrorKind::invalid_parameter,
            "n0 must be at least m + 1 (got n0=" + std::to_string(n0) + ", m=" + std::to_string(m) + ")");
    require(steps >= 0, ErrorKind::invalid_parameter, "steps must be non-negative");
}

NodeId Network::add_node() {
    degrees_.push_back(0);
    return static_cast<NodeId>(degrees_.size() - 1);
}

void Network::add_edge(NodeId creator, NodeId target) {
    edges_.push_back({creator, target});
    ++degrees_[creator];
    ++degrees_[target];
}

bool Network::is_simple() const {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (const Edge& e : edges_) {
        if (e.creator == e.target) return false;
        const std::uint64_t lo = std::min(e.creator, e.target);
        const std::uint64_t hi = std::max(e.creator, e.target);
        if (!seen.insert((hi << 32) | lo).second) return false;
    }
    return true;
}

Network init_complete(int n0) {
    require(n0 >= 2, ErrorKind::invalid_parameter, "complete graph needs n0 >= 2");
    Network net(static_cast<std::size_t>(n0));
    for (NodeId hi = 1; hi < static_cast<NodeId>(n0); ++hi)
        for (NodeId lo = 0; lo < hi; ++lo) net.add_edge(hi, lo);
    return net;
}

std::vector<NodeId> sample_distinct(std::uint32_t n, int m, RandomStream& rng) {
    require(m >= 0 && static_cast<std::uint32_t>(m) <= n, ErrorKind::invalid_parameter,
            "cannot draw " + std::to_string(m) + " distinct nodes from " + std::to_string(n));
    std::vector<NodeId> chosen;
    chosen.reserve(static_cast<std::size_t>(m));
    for (std::uint32_t j = n - static_cast<std::uint32_t>(m); j < n; ++j) {
        const auto t = static_cast<NodeId>(rng.below(std::uint64_t{j} + 1));
        // m is small, a linear scan beats hashing here
        if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
            chosen.push_back(t);
        else
            chosen.push_back(j);
    }
    return chosen;
}

void grow_step(Network& net, int m, RandomStream& rng) {
    require(m >= 1, ErrorKind::invalid_parameter, "m must be at least 1");
    require(net.node_count() >= static_cast<std::size_t>(m), ErrorKind::invalid_parameter,
            "network has fewer than m nodes");
    const auto targets = sample_distinct(static_cast<std::uint32_t>(net.node_count()), m, rng);
    const NodeId fresh = net.add_node();
    for (NodeId t : targets) net.add_edge(fresh, t);
}

Network grow_run(const GrowthParams& params) {
    params.validate();
    Network net = init_complete(params.n0);
    RandomStream rng = replica_stream(params.seed, params.replica_index);
    for (std::int64_t s = 0; s < params.steps; ++s) grow_step(net, params.m, rng);
    return net;
}

void write_edge_list(std::ostream& out, const Network& net, const GrowthParams& params) {
    out << "# " << params.n0 << ' ' << params.m << ' ' << params.steps << ' ' << params.seed << ' '
        << params.replica_index << '\n';
    for (const Edge& e : net.edges()) out << e.creator << ' ' << e.target << '\n';
}

Network read_edge_list(std::istream& in, GrowthParams* params) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<Edge> edges;
    NodeId max_id = 0;
    bool header_seen = false;
    GrowthParams header;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        if (line.front() == '#') {
            if (header_seen) continue;
            header_seen = true;
            char hash = 0;
            if (!(fields >> hash >> header.n0 >> header.m >> header.steps >> header.seed >> header.replica_index))
                fail(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": malformed edge-list header");
            if (params) *params = header;
            continue;
        }
        std::uint64_t a = 0, b = 0;
        if (!(fields >> a >> b) || a > UINT32_MAX || b > UINT32_MAX)
            fail(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": expected `creator target`");
        edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b)});
        max_id = std::max({max_id, static_cast<NodeId>(a), static_cast<NodeId>(b)});
    }
    std::size_t nodes = edges.empty() ? 0 : std::size_t{max_id} + 1;
    if (header_seen) nodes = std::max(nodes, static_cast<std::size_t>(header.n0 + header.steps));
    Network net(nodes);
    for (const Edge& e : edges) net.add_edge(e.creator, e.target);
    return net;
}

}  // namespace degcorr
