#include "doctest.h"

#include <map>
#include <set>
#include <sstream>

#include "degcorr/error.hpp"
#include "degcorr/network.hpp"
#include "degcorr/rng.hpp"

using namespace degcorr;

TEST_CASE("seed derivation is a pure function of the path") {
    static_assert(derive_seed(7, {1, 2}) == derive_seed(7, {1, 2}));
    CHECK(derive_seed(7, {1, 2}) != derive_seed(7, {2, 1}));
    CHECK(derive_seed(7, {0}) != derive_seed(8, {0}));
    RandomStream a = replica_stream(3, 5), b = replica_stream(3, 5);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("bounded draws stay in range and cover it") {
    RandomStream rng(11);
    std::map<std::uint64_t, int> seen;
    for (int i = 0; i < 7000; ++i) {
        const auto v = rng.below(7);
        REQUIRE(v < 7);
        ++seen[v];
    }
    CHECK(seen.size() == 7);
    for (const auto& [v, n] : seen) CHECK(std::abs(n - 1000) < 150);
    for (int i = 0; i < 100; ++i) {
        const auto v = rng.between(3, 5);
        CHECK((v >= 3 && v <= 5));
    }
}

TEST_CASE("complete graph start") {
    const Network k4 = init_complete(4);
    CHECK(k4.node_count() == 4);
    CHECK(k4.edge_count() == 6);
    for (int d : k4.degrees()) CHECK(d == 3);
    for (const Edge& e : k4.edges()) CHECK(e.creator > e.target);
    CHECK(k4.is_simple());
    CHECK_THROWS_AS(init_complete(1), Error);
}

TEST_CASE("growth adds one node with m distinct targets") {
    for (int m = 1; m <= 4; ++m) {
        const GrowthParams p{m, m + 2, 500, 99, 3};
        const Network net = grow_run(p);
        const int n0 = m + 2;
        CHECK(net.node_count() == static_cast<std::size_t>(n0 + 500));
        CHECK(net.edge_count() == static_cast<std::size_t>(n0 * (n0 - 1) / 2 + 500 * m));
        CHECK(net.is_simple());
        long long degree_sum = 0;
        for (int d : net.degrees()) {
            degree_sum += d;
            CHECK(d >= m);
        }
        CHECK(degree_sum == 2 * static_cast<long long>(net.edge_count()));
        // every attachment edge is created by the newer endpoint
        for (std::size_t i = static_cast<std::size_t>(n0 * (n0 - 1) / 2); i < net.edge_count(); ++i) {
            const Edge& e = net.edges()[i];
            CHECK(e.creator > e.target);
            CHECK(e.creator == static_cast<NodeId>(n0 + (i - n0 * (n0 - 1) / 2) / m));
        }
    }
}

TEST_CASE("grow_run is deterministic per (seed, replica)") {
    const GrowthParams p{2, 4, 300, 5, 0};
    CHECK(grow_run(p) == grow_run(p));
    GrowthParams q = p;
    q.replica_index = 1;
    CHECK_FALSE(grow_run(p) == grow_run(q));
}

TEST_CASE("Floyd sampling draws each subset uniformly") {
    RandomStream rng(2024);
    std::map<std::set<NodeId>, int> counts;
    const int draws = 60000;
    for (int i = 0; i < draws; ++i) {
        const auto s = sample_distinct(5, 2, rng);
        REQUIRE(s.size() == 2);
        REQUIRE(s[0] != s[1]);
        ++counts[{s.begin(), s.end()}];
    }
    CHECK(counts.size() == 10);
    double chi2 = 0.0;
    for (const auto& [subset, n] : counts) chi2 += (n - draws / 10.0) * (n - draws / 10.0) / (draws / 10.0);
    CHECK(chi2 < 27.9);  // 9 dof, p = 0.001
    CHECK_THROWS_AS(sample_distinct(2, 3, rng), Error);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((GrowthParams{0, 3, 1, 0, 0}.validate()), Error);
    CHECK_THROWS_AS((GrowthParams{3, 3, 1, 0, 0}.validate()), Error);
    CHECK_THROWS_AS((GrowthParams{1, 3, -1, 0, 0}.validate()), Error);
    CHECK_NOTHROW((GrowthParams{2, 3, 0, 0, 0}.validate()));
    try {
        GrowthParams{3, 2, 1, 0, 0}.validate();
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_parameter);
    }
}

TEST_CASE("edge list round trip") {
    const GrowthParams p{2, 3, 40, 17, 2};
    const Network net = grow_run(p);
    std::stringstream buf;
    write_edge_list(buf, net, p);
    CHECK(buf.str().rfind("# 3 2 40 17 2\n", 0) == 0);
    GrowthParams back;
    const Network again = read_edge_list(buf, &back);
    CHECK(again == net);
    CHECK(back.seed == 17);
    CHECK(back.replica_index == 2);
}

TEST_CASE("edge list parse errors name the line") {
    std::istringstream bad("# 3 1 0 0 0\n1 0\n2 x\n");
    try {
        read_edge_list(bad);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse_error);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    std::istringstream bad_header("# three\n");
    CHECK_THROWS_AS(read_edge_list(bad_header), Error);
}
