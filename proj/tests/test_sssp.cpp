#include <doctest.h>

#include <algorithm>

#include "nwsp/solver.hpp"
#include "nwsp/sssp.hpp"
#include "oracles.hpp"

using namespace nwsp;
using test::random_graph;

TEST_CASE("dijkstra on a hand path") {
    Graph g = build_graph(3, {{0, 1, 2}, {1, 2, 3}});
    ShortestPathTree t = dijkstra(g, 0);
    CHECK(t.dist[0] == 0);
    CHECK(t.dist[1] == 2);
    CHECK(t.dist[2] == 5);
}

TEST_CASE("dijkstra marks isolated vertices unreachable") {
    Graph g = build_graph(2, {});
    ShortestPathTree t = dijkstra(g, 0);
    CHECK(!t.reachable(1));
    CHECK(t.reachable(0));
}

TEST_CASE("dijkstra rejects negative weights") {
    Graph g = build_graph(2, {{0, 1, -1}});
    CHECK_THROWS_AS(dijkstra(g, 0), NegativeWeightPresent);
}

TEST_CASE("dijkstra equals the oracle on random nonnegative graphs") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_graph(40, 120, 0, 9, seed);
        ShortestPathTree t = dijkstra(g, static_cast<int>(seed % 40));
        auto d = test::brute_distances(g, t.source);
        REQUIRE(d.has_value());
        for (int v = 0; v < g.n(); ++v) {
            CHECK(t.reachable(v) == ((*d)[v] != kNoDist));
            if (t.reachable(v)) CHECK(t.dist[v] == (*d)[v]);
        }
        CHECK(!check_tree_certificate(g, t));
    }
}

TEST_CASE("bellman_ford returns a reachable negative self-loop") {
    Graph g = build_graph(2, {{0, 1, 1}, {1, 1, -3}});
    auto r = bellman_ford(g, 0);
    REQUIRE(std::holds_alternative<NegativeCycle>(r));
    const auto& c = std::get<NegativeCycle>(r);
    CHECK(c.vertices == std::vector<int>{1});
    CHECK(c.weight == -3);
}

TEST_CASE("bellman_ford on negative DAGs is exact") {
    Graph g = build_graph(4, {{0, 1, -4}, {1, 2, -1}, {0, 2, -6}, {2, 3, 2}});
    auto r = bellman_ford(g, 0);
    REQUIRE(std::holds_alternative<ShortestPathTree>(r));
    const auto& t = std::get<ShortestPathTree>(r);
    CHECK(t.dist[2] == -6);
    CHECK(t.dist[3] == -4);
    CHECK(!check_tree_certificate(g, t));
}

TEST_CASE("bellman_ford cycles re-verify by summation") {
    int cycles = 0;
    for (uint64_t seed = 0; seed < 500; ++seed) {
        Graph g = random_graph(10, 26, -5, 6, seed);
        auto [gs, s] = add_dummy_source(g);
        auto r = bellman_ford(gs, s);
        if (std::holds_alternative<NegativeCycle>(r)) {
            ++cycles;
            const auto& c = std::get<NegativeCycle>(r);
            CHECK(!check_negative_cycle(gs, c));
        } else {
            const auto& t = std::get<ShortestPathTree>(r);
            CHECK(!check_tree_certificate(gs, t));
        }
    }
    CHECK(cycles > 50);  // the family genuinely mixes both outcomes
}

TEST_CASE("elim_neg equals Dijkstra on nonnegative graphs") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(20, 50, 0, 8, seed);
        auto [gs, s] = add_dummy_source(g);
        StepBudget budget(1 << 22);
        PriceFunction phi = elim_neg(gs, s, budget);
        ShortestPathTree t = dijkstra(gs, s);
        Graph reweighted = apply_price(gs, phi);
        for (int v = 0; v < gs.n(); ++v) CHECK(phi[v] == t.dist[v]);
        for (int e = 0; e < gs.m(); ++e) CHECK(reweighted.weight(e) >= 0);
    }
}

TEST_CASE("elim_neg hand trace on a two-edge path") {
    // s -> a (0), a -> b (-4)
    Graph g = build_graph(3, {{0, 1, 0}, {1, 2, -4}});
    StepBudget budget(10000);
    PriceFunction phi = elim_neg(g, 0, budget);
    CHECK(phi[0] == 0);
    CHECK(phi[1] == 0);
    CHECK(phi[2] == -4);
    Graph rw = apply_price(g, phi);
    CHECK(rw.weight(1) == 0);
}

TEST_CASE("elim_neg never terminates on a planted cycle") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = random_graph(12, 30, -6, 9, seed, GenMode::PlantedCycle);
        auto [gs, s] = add_dummy_source(g);
        StepBudget budget(1 << 22);
        CHECK_THROWS_AS(elim_neg(gs, s, budget), BudgetExhausted);
    }
}

TEST_CASE("elim_neg reweights every dummy-source instance nonnegative") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(24, 70, -6, 10, seed, GenMode::HiddenPotential);
        auto [gs, s] = add_dummy_source(g);
        StepBudget budget(1 << 24);
        PriceFunction phi = elim_neg(gs, s, budget);
        Graph rw = apply_price(gs, phi);
        for (int e = 0; e < rw.m(); ++e) CHECK(rw.weight(e) >= 0);
    }
}

TEST_CASE("elim_neg queue work scales with n plus total negative depth") {
    // Path families with eta sums 0, n/4, n/2, n: negative edges placed from
    // the tail so each contributes its suffix length.
    const int n = 64;
    std::vector<uint64_t> ops;
    for (int target : {0, n / 4, n / 2, n}) {
        // A negative edge at position p deepens the eta sum by n-1-p; pick
        // contributions greedily from the largest.
        std::vector<char> neg(static_cast<size_t>(n - 1), 0);
        int remaining = target;
        for (int contribution = n - 1; contribution >= 1 && remaining > 0; --contribution) {
            if (contribution <= remaining) {
                neg[n - 1 - contribution] = 1;
                remaining -= contribution;
            }
        }
        REQUIRE(remaining == 0);
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.push_back({i, i + 1, neg[i] ? Weight(-1) : Weight(1)});
        Graph g = build_graph(n, edges);
        // sanity: the suffix construction hits the target eta sum
        auto eta = test::brute_eta(g, 0);
        long long eta_sum = 0;
        for (int v = 0; v < n; ++v) eta_sum += eta[v];
        REQUIRE(eta_sum == target);

        StepBudget budget(1 << 24);
        PriceFunction phi = elim_neg(g, 0, budget);
        Graph rw = apply_price(g, phi);
        for (int e = 0; e < rw.m(); ++e) CHECK(rw.weight(e) >= 0);
        ops.push_back(budget.used / (static_cast<uint64_t>(n) + target));
    }
    uint64_t lo = *std::min_element(ops.begin(), ops.end());
    uint64_t hi = *std::max_element(ops.begin(), ops.end());
    CHECK(hi <= 3 * lo);  // a single constant within +-50%
}

TEST_CASE("fix_dag_edges examples") {
    SUBCASE("two singleton parts with one negative cross edge") {
        Graph g = build_graph(2, {{0, 1, -5}});
        VertexPartition p{{{0}, {1}}, {0, 1}, {0, 1}};
        PriceFunction phi = fix_dag_edges(g, p);
        CHECK(phi[0] == 0);
        CHECK(phi[1] == -5);
        CHECK(apply_price(g, phi).weight(0) == 0);
    }
    SUBCASE("no negative cross edges leaves weights unchanged") {
        Graph g = build_graph(4, {{0, 1, 2}, {1, 2, 0}, {2, 3, 5}});
        VertexPartition p{{{0}, {1}, {2}, {3}}, {0, 1, 2, 3}, {0, 1, 2, 3}};
        PriceFunction phi = fix_dag_edges(g, p);
        for (int v = 0; v < 4; ++v) CHECK(phi[v] == 0);
    }
    SUBCASE("three parts accumulate entering minima") {
        // parts {0}, {1}, {2}; entering minima 0, -2, -3 -> M = 0, -2, -5
        Graph g = build_graph(3, {{0, 1, -2}, {0, 2, -1}, {1, 2, -3}});
        VertexPartition p{{{0}, {1}, {2}}, {0, 1, 2}, {0, 1, 2}};
        PriceFunction phi = fix_dag_edges(g, p);
        CHECK(phi[0] == 0);
        CHECK(phi[1] == -2);
        CHECK(phi[2] == -5);
        Graph rw = apply_price(g, phi);
        for (int e = 0; e < g.m(); ++e) CHECK(rw.weight(e) >= 0);
    }
    SUBCASE("precondition violations") {
        Graph g = build_graph(2, {{0, 1, -5}, {1, 0, 1}});
        VertexPartition backwards{{{0}, {1}}, {0, 1}, {0, 1}};
        CHECK_THROWS_AS(fix_dag_edges(g, backwards), PartitionNotDag);
        Graph neg_inside = build_graph(2, {{0, 1, -5}});
        VertexPartition one{{{0, 1}}, {0, 0}, {0}};
        CHECK_THROWS_AS(fix_dag_edges(neg_inside, one), NegativeIntraPartEdge);
    }
    SUBCASE("phi is constant on parts for block-DAG instances") {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            // Four 3-cycles with nonnegative internal weights, mixed-sign
            // edges only forward between blocks.
            Rng rng(seed);
            std::vector<Edge> edges;
            for (int blk = 0; blk < 4; ++blk) {
                int base = 3 * blk;
                for (int i = 0; i < 3; ++i)
                    edges.push_back({base + i, base + (i + 1) % 3,
                                     static_cast<Weight>(rng.next_below(6))});
            }
            for (int i = 0; i < 10; ++i) {
                int bi = static_cast<int>(rng.next_below(3));
                int bj = bi + 1 + static_cast<int>(rng.next_below(3 - bi));
                int u = 3 * bi + static_cast<int>(rng.next_below(3));
                int v = 3 * bj + static_cast<int>(rng.next_below(3));
                edges.push_back({u, v, static_cast<Weight>(rng.next_below(11)) - 5});
            }
            Graph g = build_graph(12, edges);
            VertexPartition p = strongly_connected_components(g);
            REQUIRE(p.parts.size() == 4);
            PriceFunction phi = fix_dag_edges(g, p);
            for (const auto& part : p.parts)
                for (int v : part) CHECK(phi[v] == phi[part[0]]);
            Graph rw = apply_price(g, phi);
            for (int e = 0; e < g.m(); ++e) CHECK(rw.weight(e) >= 0);
        }
    }
}

TEST_CASE("sp_with_few_neg_edges") {
    SUBCASE("large budget reproduces exact distances") {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            Graph g = random_graph(16, 40, -5, 9, seed, GenMode::HiddenPotential);
            auto [gs, s] = add_dummy_source(g);
            auto est = sp_with_few_neg_edges(gs, s, gs.n());
            auto d = test::brute_distances(gs, s);
            REQUIRE(d.has_value());
            for (int v = 0; v < gs.n(); ++v) CHECK(est[v] == (*d)[v]);
        }
    }
    SUBCASE("k = 0 on a nonnegative graph is plain Dijkstra") {
        Graph g = random_graph(16, 40, 0, 9, 5);
        auto [gs, s] = add_dummy_source(g);
        auto est = sp_with_few_neg_edges(gs, s, 0);
        ShortestPathTree t = dijkstra(gs, s);
        for (int v = 0; v < gs.n(); ++v) CHECK(est[v] == t.dist[v]);
    }
    SUBCASE("a vertex behind two negative hops is inexact at k = 1") {
        // Alternating signs: s->a (-2), a->b (1), b->c (-3), c->d (1). The
        // tail vertex d sits behind two negative edges plus a nonnegative
        // suffix, which needs a third round.
        Graph g = build_graph(5, {{0, 1, -2}, {1, 2, 1}, {2, 3, -3}, {3, 4, 1}});
        auto est1 = sp_with_few_neg_edges(g, 0, 1);
        auto est2 = sp_with_few_neg_edges(g, 0, 2);
        auto d = test::brute_distances(g, 0);
        REQUIRE(d.has_value());
        CHECK(est1[1] == (*d)[1]);
        CHECK(est1[2] == (*d)[2]);
        CHECK(est1[4] > (*d)[4]);
        CHECK(est2[4] == (*d)[4]);
    }
    SUBCASE("estimates improve monotonically in k") {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            Graph g = random_graph(14, 36, -4, 8, seed, GenMode::HiddenPotential);
            auto [gs, s] = add_dummy_source(g);
            std::vector<Weight> prev = sp_with_few_neg_edges(gs, s, 0);
            for (int k = 1; k <= 4; ++k) {
                std::vector<Weight> cur = sp_with_few_neg_edges(gs, s, k);
                for (int v = 0; v < gs.n(); ++v) CHECK(cur[v] <= prev[v]);
                prev = std::move(cur);
            }
        }
    }
}
