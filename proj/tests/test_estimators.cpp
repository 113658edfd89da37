#include "doctest.h"

#include <cmath>
#include <vector>

#include "degcorr/error.hpp"
#include "degcorr/estimators.hpp"
#include "oracles.hpp"

using namespace degcorr;

namespace {

Network from_pairs(std::size_t nodes, const std::vector<std::pair<NodeId, NodeId>>& pairs) {
    Network net(nodes);
    for (const auto& [a, b] : pairs) net.add_edge(a, b);
    return net;
}

Network star(int leaves) {
    Network net(static_cast<std::size_t>(leaves) + 1);
    for (int i = 1; i <= leaves; ++i) net.add_edge(static_cast<NodeId>(i), 0);
    return net;
}

Network cycle(int n) {
    Network net(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) net.add_edge(static_cast<NodeId>((i + 1) % n), static_cast<NodeId>(i));
    return net;
}

}  // namespace

TEST_CASE("joint degree matrix of a star") {
    const Network s = star(4);
    const auto u = joint_degree_matrix(s, Mode::undirected, 1);
    CHECK(u.probabilities(1, 4) == 1.0);
    CHECK(u.probabilities.total() == 1.0);
    CHECK(u.edge_count == 4);
    const auto d = joint_degree_matrix(s, Mode::directed, 1);
    CHECK(d.probabilities(1, 4) == 1.0);
    CHECK(d.probabilities(4, 1) == 0.0);
}

TEST_CASE("star graph is perfectly disassortative") {
    for (int leaves : {2, 3, 7, 50}) {
        const auto r = pearson_r(joint_degree_matrix(star(leaves), Mode::undirected, 1)).pearson_r;
        REQUIRE(r.has_value());
        CHECK(std::abs(*r + 1.0) <= 1e-12);
    }
}

TEST_CASE("regular graphs have no defined r") {
    CHECK_FALSE(pearson_r(joint_degree_matrix(cycle(9), Mode::undirected, 1)).pearson_r.has_value());
    CHECK_FALSE(pearson_r(joint_degree_matrix(cycle(9), Mode::directed, 1)).pearson_r.has_value());
    Network k5(5);
    for (NodeId a = 1; a < 5; ++a)
        for (NodeId b = 0; b < a; ++b) k5.add_edge(a, b);
    CHECK_FALSE(pearson_r(joint_degree_matrix(k5, Mode::undirected, 1)).pearson_r.has_value());
}

TEST_CASE("path of three nodes") {
    const Network path = from_pairs(3, {{1, 0}, {2, 1}});
    const auto knn = average_neighbor_degree(path).knn;
    CHECK(knn.at(1) == 2.0);
    CHECK(knn.at(2) == 1.0);
    CHECK(knn.size() == 2);
}

TEST_CASE("pearson r agrees with a per-edge computation") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Network net = grow_run({2, 4, 400, seed, 0});
        std::vector<std::pair<int, int>> both, directed;
        for (const Edge& e : net.edges()) {
            const int a = net.degree(e.creator), b = net.degree(e.target);
            both.emplace_back(a, b);
            both.emplace_back(b, a);
            directed.emplace_back(a, b);
        }
        CHECK(*pearson_r(joint_degree_matrix(net, Mode::undirected, 2)).pearson_r ==
              doctest::Approx(oracle::pearson_edges(both)).epsilon(1e-10));
        CHECK(*pearson_r(joint_degree_matrix(net, Mode::directed, 2)).pearson_r ==
              doctest::Approx(oracle::pearson_edges(directed)).epsilon(1e-10));
    }
}

TEST_CASE("average neighbour degree agrees with an adjacency-list computation") {
    const Network net = grow_run({1, 3, 300, 8, 0});
    std::vector<std::vector<NodeId>> adj(net.node_count());
    for (const Edge& e : net.edges()) {
        adj[e.creator].push_back(e.target);
        adj[e.target].push_back(e.creator);
    }
    std::map<int, std::pair<double, int>> acc;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        double mean = 0.0;
        for (NodeId w : adj[v]) mean += net.degree(w);
        mean /= static_cast<double>(adj[v].size());
        acc[static_cast<int>(adj[v].size())].first += mean;
        acc[static_cast<int>(adj[v].size())].second += 1;
    }
    const auto got = average_neighbor_degree(net);
    for (const auto& [k, sum_n] : acc) {
        CHECK(got.knn.at(k) == doctest::Approx(sum_n.first / sum_n.second).epsilon(1e-12));
        CHECK(got.knn_support.at(k) == sum_n.second);
    }
}

TEST_CASE("node counts invert the joint degree matrix on simulated networks") {
    for (std::uint64_t i = 0; i < 100; ++i) {
        const int m = 1 + static_cast<int>(i % 4);
        const Mode mode = i % 2 ? Mode::directed : Mode::undirected;
        const GrowthParams p{m, m + 1 + static_cast<int>(i % 3), 50 + static_cast<std::int64_t>(i * 7), 1000 + i, i};
        const Network net = grow_run(p);
        const auto mat = joint_degree_matrix(net, mode, m);
        const auto hist = degree_histogram(net);

        EdgeStateDistribution dist;
        dist.m = m;
        dist.edges_after_step = static_cast<std::int64_t>(net.edge_count()) + m;
        dist.node_count = static_cast<std::int64_t>(net.node_count());
        dist.entries = mat.probabilities;
        const auto rebuilt = node_counts_from_edge_dist(dist);

        REQUIRE(rebuilt.counts.size() == hist.counts.size());
        for (const auto& [k, n] : hist.counts) {
            REQUIRE(rebuilt.counts.count(k) == 1);
            const double got = rebuilt.counts.at(k);
            CHECK(std::abs(got - n) <= 1e-9 * n);
            CHECK(std::round(got) == n);
        }
        CHECK(std::round(rebuilt.total_nodes) == static_cast<double>(net.node_count()));
        CHECK(node_counts_from_matrix(mat).counts.size() == hist.counts.size());
    }
}

TEST_CASE("merge weights by edge count") {
    JointDegreeMatrix a{1, DegreeMatrix(Mode::directed, 3), 10, 1};
    JointDegreeMatrix b{1, DegreeMatrix(Mode::directed, 2), 30, 1};
    a.probabilities(1, 3) = 1.0;
    b.probabilities(2, 2) = 1.0;
    const std::vector<JointDegreeMatrix> parts{a, b};
    const auto merged = merge_matrices(parts);
    CHECK(merged.probabilities(1, 3) == 0.25);
    CHECK(merged.probabilities(2, 2) == 0.75);
    CHECK(merged.edge_count == 40);
    CHECK(merged.replicas_merged == 2);

    JointDegreeMatrix c{2, DegreeMatrix(Mode::directed, 2), 5, 1};
    const std::vector<JointDegreeMatrix> clash{a, c};
    try {
        merge_matrices(clash);
        FAIL("expected incompatible-inputs");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::incompatible_inputs);
    }
    CHECK_THROWS_AS(merge_matrices(std::span<const JointDegreeMatrix>{}), Error);
}

TEST_CASE("empty network is rejected") {
    try {
        joint_degree_matrix(Network(3), Mode::undirected, 1);
        FAIL("expected empty-input");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::empty_input);
    }
}

TEST_CASE("edge-conditional knn treats both endpoints alike") {
    DegreeMatrix d(Mode::directed, 4);
    d(1, 4) = 1.0;
    const auto knn = edge_conditional_knn(d);
    CHECK(knn.at(1) == 4.0);
    CHECK(knn.at(4) == 1.0);
}

TEST_CASE("node counts reject mass at degree zero") {
    DegreeMatrix d(Mode::undirected, 2);
    d(0, 1) = 1.0;
    CHECK_THROWS_AS(node_counts(d, 1.0), Error);
}

TEST_CASE("merged neighbour degree is support weighted") {
    CorrelationSummary a, b;
    a.knn[2] = 1.0;
    a.knn_support[2] = 1.0;
    b.knn[2] = 4.0;
    b.knn_support[2] = 3.0;
    const std::vector<CorrelationSummary> parts{a, b};
    const auto pooled = merge_neighbor_degree(parts);
    CHECK(pooled.knn.at(2) == doctest::Approx(13.0 / 4.0));
    CHECK(pooled.knn_support.at(2) == 4.0);
}
