#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nwsp/ldd.hpp"
#include "oracles.hpp"

using namespace nwsp;
using test::random_graph;

namespace {

// Exact weak-diameter check: every SCC of g minus the removed set must have
// all pairwise distances <= D in the full graph.
bool weak_diameter_holds(const Graph& g, const std::vector<int>& removed, Weight d) {
    EdgeSubgraph rest = remove_edges(g, removed);
    VertexPartition sccs = strongly_connected_components(rest.graph);
    for (const auto& part : sccs.parts) {
        if (part.size() == 1) continue;
        for (int u : part) {
            ShortestPathTree t = dijkstra(g, u);
            for (int v : part) {
                if (!t.reachable(v) || t.dist[v] > d) return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("bounded_ball examples") {
    SUBCASE("radius zero includes the 0-weight reachable set") {
        Graph g = build_graph(3, {{0, 1, 0}, {1, 2, 4}});
        auto [ball, boundary] = bounded_ball(g, 0, 0, BallDir::Out);
        CHECK(ball == std::vector<int>{0, 1});
        CHECK(boundary == std::vector<int>{1});
    }
    SUBCASE("unit path out-ball") {
        Graph g = build_graph(3, {{0, 1, 1}, {1, 2, 1}});
        auto [ball, boundary] = bounded_ball(g, 0, 1, BallDir::Out);
        CHECK(ball == std::vector<int>{0, 1});
        CHECK(boundary == std::vector<int>{1});
        auto [in_ball, in_boundary] = bounded_ball(g, 2, 1, BallDir::In);
        CHECK(in_ball == std::vector<int>{1, 2});
        CHECK(in_boundary == std::vector<int>{0});
    }
    SUBCASE("matches a full Dijkstra filter") {
        for (uint64_t seed = 0; seed < 15; ++seed) {
            Graph g = random_graph(30, 90, 0, 7, seed);
            int v = static_cast<int>(seed % 30);
            Weight r = static_cast<Weight>(seed % 13);
            auto [ball, boundary] = bounded_ball(g, v, r, BallDir::Out);
            ShortestPathTree t = dijkstra(g, v);
            std::vector<int> expect;
            for (int u = 0; u < g.n(); ++u)
                if (t.reachable(u) && t.dist[u] <= r) expect.push_back(u);
            CHECK(ball == expect);
        }
    }
    CHECK_THROWS_AS(bounded_ball(build_graph(2, {{0, 1, -1}}), 0, 3, BallDir::Out),
                    NegativeWeightPresent);
}

TEST_CASE("single-vertex graph removes nothing") {
    Graph g = build_graph(1, {});
    LddParams params;
    params.diameter = 10;
    params.global_n = 32;
    Rng rng(4);
    LddResult res = low_diam_decomposition(g, params, rng);
    CHECK(res.removed.empty());
}

TEST_CASE("small-diameter strongly connected graphs usually stay whole") {
    // Bidirected unit cycle on 32 vertices, true diameter 16 <= D/4.
    std::vector<Edge> edges;
    for (int i = 0; i < 32; ++i) {
        edges.push_back({i, (i + 1) % 32, 1});
        edges.push_back({(i + 1) % 32, i, 1});
    }
    Graph g = build_graph(32, edges);
    LddParams params;
    params.diameter = 64;
    params.global_n = 32;
    int intact = 0;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        LddResult res = low_diam_decomposition(g, params, rng);
        if (res.removed.empty()) ++intact;
    }
    CHECK(intact >= 95);
}

TEST_CASE("weak diameter holds on every run") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(26, 70, 0, 6, seed);
        for (Weight d : {1, 5, 40}) {
            LddParams params;
            params.diameter = d;
            params.global_n = g.n();
            Rng rng(seed * 7 + static_cast<uint64_t>(d));
            LddResult res = low_diam_decomposition(g, params, rng);
            CHECK(weak_diameter_holds(g, res.removed, d));
        }
    }
}

TEST_CASE("decomposition is deterministic per seed") {
    Graph g = random_graph(40, 120, 0, 5, 77);
    LddParams params;
    params.diameter = 9;
    params.global_n = 40;
    Rng r1(123), r2(123);
    LddResult a = low_diam_decomposition(g, params, r1);
    LddResult b = low_diam_decomposition(g, params, r2);
    CHECK(a.removed == b.removed);
    CHECK(a.stats.boundary_edges == b.stats.boundary_edges);
}

TEST_CASE("vertex participation stays logarithmic") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(60, 150, 0, 4, seed);
        LddParams params;
        params.diameter = 3;
        params.global_n = 60;
        Rng rng(seed);
        LddResult res = low_diam_decomposition(g, params, rng);
        int cap = static_cast<int>(std::ceil(std::log(60.0) / std::log(10.0 / 7.0)));
        CHECK(res.stats.max_vertex_participation <= cap);
    }
}

TEST_CASE("rejects negative weights") {
    Graph g = build_graph(2, {{0, 1, -1}});
    LddParams params;
    params.diameter = 4;
    params.global_n = 2;
    Rng rng(0);
    CHECK_THROWS_AS(low_diam_decomposition(g, params, rng), NegativeWeightPresent);
}

TEST_CASE("removed fraction trends down as D grows") {
    // Unit-weight directed 64-cycle; larger diameters should cut no more.
    std::vector<Edge> edges;
    for (int i = 0; i < 64; ++i) edges.push_back({i, (i + 1) % 64, 1});
    Graph g = build_graph(64, edges);
    double means[3];
    int idx = 0;
    for (Weight d : {64, 256, 1024}) {
        uint64_t total = 0;
        for (uint64_t seed = 0; seed < 60; ++seed) {
            LddParams params;
            params.diameter = d;
            params.global_n = 64;
            Rng rng(seed);
            total += low_diam_decomposition(g, params, rng).removed.size();
        }
        means[idx++] = static_cast<double>(total) / 60.0;
    }
    CHECK(means[1] <= means[0] * 1.10 + 1e-9);
    CHECK(means[2] <= means[1] * 1.10 + 1e-9);
}
