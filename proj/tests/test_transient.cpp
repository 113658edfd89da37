#include "doctest.h"

#include <cmath>

#include "degcorr/error.hpp"
#include "degcorr/rng.hpp"
#include "degcorr/transient.hpp"
#include "oracles.hpp"

using namespace degcorr;

namespace {

double distance_to(const DegreeMatrix& d, const oracle::Table& expected) {
    double worst = 0.0;
    for (int a = 0; a <= d.max_degree(); ++a)
        for (int b = 0; b <= d.max_degree(); ++b) {
            const auto it = expected.find({a, b});
            worst = std::max(worst, std::abs(d(a, b) - (it == expected.end() ? 0.0 : it->second)));
        }
    for (const auto& [cell, p] : expected) worst = std::max(worst, std::abs(d.get(cell.first, cell.second) - p));
    return worst;
}

void check_against_enumeration(Mode mode, int m, int n0, int steps) {
    const auto expected = oracle::enumerate_histories(mode == Mode::directed, m, n0, steps);
    EdgeStateDistribution dist = transient_initial(mode, m, n0, 20);
    EdgeStateDistribution ref = dist;
    for (int t = 0; t <= steps; ++t) {
        CAPTURE(t);
        CHECK(distance_to(dist.entries, expected[static_cast<std::size_t>(t)]) <= 1e-12);
        CHECK(distance_to(ref.entries, expected[static_cast<std::size_t>(t)]) <= 1e-12);
        CHECK(dist.tail_mass <= 1e-15);
        if (t < steps) {
            dist = transient_step(dist, 2);
            ref = reference::transient_step(ref);
        }
    }
}

/// A reachable state: iterate from a random start on a deliberately small
/// window so that a good share of the mass sits in the tail.
EdgeStateDistribution random_state(RandomStream& rng, Mode mode) {
    const int m = static_cast<int>(rng.between(1, 3));
    TransientOptions opts;
    opts.max_k = static_cast<int>(rng.between(static_cast<std::uint64_t>(m) + 4, 14));
    opts.tail_epsilon = 2.0;  // never widen
    opts.jobs = 1;
    const int n0 = m + 1 + static_cast<int>(rng.below(3));
    return transient_run(mode, m, n0, static_cast<std::int64_t>(rng.between(1, 300)), opts);
}

}  // namespace

TEST_CASE("first step from K3") {
    const auto d = transient_step(transient_initial(Mode::directed, 1, 3, 10));
    CHECK(d.entries(2, 2) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(d.entries(3, 2) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(d.entries(2, 3) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(d.entries(1, 3) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(d.entries.total() == doctest::Approx(1.0).epsilon(1e-15));

    const auto u = transient_step(transient_initial(Mode::undirected, 1, 3, 10));
    CHECK(u.entries(2, 2) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(u.entries(2, 3) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(u.entries(1, 3) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(u.entries.total() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(u.t == 1);
    CHECK(u.node_count == 4);
    CHECK(u.current_edges() == 4);
}

TEST_CASE("exhaustive enumeration, m = 1, n0 = 3, t <= 5") {
    check_against_enumeration(Mode::directed, 1, 3, 5);
    check_against_enumeration(Mode::undirected, 1, 3, 5);
}

TEST_CASE("exhaustive enumeration, m = 2, n0 = 3, t <= 4") {
    check_against_enumeration(Mode::directed, 2, 3, 4);
    check_against_enumeration(Mode::undirected, 2, 3, 4);
}

TEST_CASE("exhaustive enumeration, m = 3, n0 = 4, t <= 3") {
    check_against_enumeration(Mode::directed, 3, 4, 3);
    check_against_enumeration(Mode::undirected, 3, 4, 3);
}

TEST_CASE("parallel pull form, serial scatter form and thread counts agree") {
    RandomStream rng(5);
    for (int i = 0; i < 40; ++i) {
        const Mode mode = i % 2 ? Mode::directed : Mode::undirected;
        const auto d = random_state(rng, mode);
        const auto a = transient_step(d, 1);
        const auto b = transient_step(d, 4);
        const auto r = reference::transient_step(d);
        CHECK(a.entries == b.entries);
        CHECK(a.tail_mass == b.tail_mass);
        CHECK(sup_distance(a.entries, r.entries) <= 1e-15);
        CHECK(std::abs(a.tail_mass - r.tail_mass) <= 1e-15);
        // mass is conserved, including what leaves the window
        CHECK(std::abs(a.entries.total() + a.tail_mass - 1.0) <= 1e-12);
        for (double v : a.entries.cells()) CHECK(v >= 0.0);
    }
}

TEST_CASE("stationary grid is preserved by a step of a very large network") {
    for (int m = 1; m <= 3; ++m)
        for (Mode mode : {Mode::directed, Mode::undirected}) {
            const auto grid = stationary_adaptive({m, 60, 1e-14, mode});
            EdgeStateDistribution d;
            d.m = m;
            d.node_count = 1'000'000;
            d.edges_after_step = d.node_count * m + m;
            d.entries = grid.entries;
            d.tail_mass = grid.tail_mass;
            const auto next = transient_step(d);
            CHECK(sup_distance(next.entries, grid.entries) <= 1e-10);
        }
}

TEST_CASE("transient run widens the window instead of losing mass") {
    TransientOptions opts;
    opts.max_k = 8;
    opts.tail_epsilon = 1e-12;
    const auto d = transient_run(Mode::undirected, 1, 3, 400, opts);
    CHECK(d.max_k() > 8);
    CHECK(d.tail_mass < 1e-9);
    CHECK(std::abs(d.entries.total() + d.tail_mass - 1.0) <= 1e-12);
    CHECK(d.t == 400);

    int seen = 0;
    transient_run(Mode::directed, 1, 3, 3, opts, [&](const EdgeStateDistribution& s) { CHECK(s.t == seen++); });
    CHECK(seen == 4);
}

TEST_CASE("transient approaches the stationary grid") {
    for (Mode mode : {Mode::directed, Mode::undirected}) {
        const auto grid = stationary_adaptive({1, 60, 1e-13, mode});
        TransientOptions opts;
        std::vector<double> dist;
        transient_run(mode, 1, 3, 1000, opts, [&](const EdgeStateDistribution& s) {
            if (s.t == 10 || s.t == 100 || s.t == 1000) dist.push_back(sup_distance(s.entries, grid.entries));
        });
        REQUIRE(dist.size() == 3);
        CHECK(dist[1] < dist[0]);
        CHECK(dist[2] < dist[1]);
    }
}

TEST_CASE("transient argument checks") {
    const auto d = transient_initial(Mode::directed, 1, 3, 10);
    CHECK_THROWS_AS(transient_step_undirected(d), Error);
    CHECK_NOTHROW(transient_step_directed(d));
    auto broken = d;
    broken.entries(2, 2) = 0.5;
    try {
        transient_step(broken);
        FAIL("expected invalid-state");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_state);
    }
    CHECK_THROWS_AS(transient_initial(Mode::directed, 2, 2, 10), Error);
    CHECK_THROWS_AS(transient_run(Mode::directed, 1, 3, -1, {}), Error);
}
