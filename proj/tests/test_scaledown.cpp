#include <doctest.h>

#include "nwsp/scaledown.hpp"
#include "oracles.hpp"

using namespace nwsp;
using test::random_graph;

namespace {

ExecutionContext make_ctx(uint64_t seed, int global_n) {
    ExecutionContext ctx(seed);
    ctx.global_n = std::max(global_n, 2);
    ctx.budget = StepBudget(1ULL << 32);
    return ctx;
}

void check_output(const Graph& g, const PriceFunction& phi, Weight b) {
    Graph rw = apply_price(g, phi);
    for (int e = 0; e < rw.m(); ++e) CHECK(rw.weight(e) >= -b);
}

}  // namespace

TEST_CASE("delta 2 base case") {
    // Every shortest dummy-source path uses at most 2 negative edges.
    Graph g = build_graph(4, {{0, 1, -8}, {1, 2, 3}, {2, 3, -8}, {0, 3, 2}});
    auto [rg, gm] = reduce_out_degree(g);
    ExecutionContext ctx = make_ctx(5, rg.n());
    PriceFunction phi = scale_down({rg, 2, 4}, ctx);
    check_output(rg, phi, 4);
}

TEST_CASE("nonnegative graphs are already feasible") {
    for (uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = random_graph(20, 60, 0, 9, seed);
        ExecutionContext ctx = make_ctx(seed, g.n());
        PriceFunction phi = scale_down({g, 8, 3}, ctx);
        Graph rw = apply_price(g, phi);
        for (int e = 0; e < rw.m(); ++e) CHECK(rw.weight(e) >= 0);
    }
}

TEST_CASE("postcondition on random cycle-free instances") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Weight b = 1 + static_cast<Weight>(seed % 4);
        Graph g = random_graph(30, 80, -2 * b, 12, seed, GenMode::HiddenPotential);
        auto [rg, gm] = reduce_out_degree(g);
        ExecutionContext ctx = make_ctx(seed, rg.n());
        PriceFunction phi = scale_down({rg, rg.n(), b}, ctx);
        check_output(rg, phi, b);
    }
}

TEST_CASE("input validation") {
    Graph g = build_graph(2, {{0, 1, -9}});
    ExecutionContext ctx = make_ctx(0, 2);
    CHECK_THROWS_AS(scale_down({g, 4, 0}, ctx), InvalidInput);
    CHECK_THROWS_AS(scale_down({g, 0, 4}, ctx), InvalidInput);
    CHECK_THROWS_AS(scale_down({g, 4, 4}, ctx), InvalidInput);  // -9 < -2*4
}

TEST_CASE("cycles that stay negative after the B-shift exhaust the budget") {
    // Two-cycle with weights -2B and B-1 keeps weight -1 in G^B, so the final
    // elimination pass can never settle.
    const Weight b = 4;
    for (uint64_t seed = 0; seed < 6; ++seed) {
        Rng rng(seed);
        std::vector<Edge> edges{{0, 1, -2 * b}, {1, 0, b - 1}};
        for (int i = 0; i < 20; ++i)
            edges.push_back({static_cast<int>(rng.next_below(10)),
                             static_cast<int>(rng.next_below(10)),
                             static_cast<Weight>(rng.next_below(9))});
        Graph g = build_graph(10, edges);
        auto [rg, gm] = reduce_out_degree(g);
        ExecutionContext ctx = make_ctx(seed, rg.n());
        ctx.budget = StepBudget(1ULL << 26);
        CHECK_THROWS_AS(scale_down({rg, 2, b}, ctx), BudgetExhausted);
    }
}

TEST_CASE("recursive inputs stay cycle-free and deterministic per seed") {
    Graph g = random_graph(24, 60, -6, 10, 11, GenMode::HiddenPotential);
    auto [rg, gm] = reduce_out_degree(g);
    ExecutionContext c1 = make_ctx(9, rg.n());
    ExecutionContext c2 = make_ctx(9, rg.n());
    PriceFunction a = scale_down({rg, rg.n(), 3}, c1);
    PriceFunction b = scale_down({rg, rg.n(), 3}, c2);
    CHECK(a.values == b.values);
}
