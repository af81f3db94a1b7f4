#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "nwsp/graph.hpp"

namespace nwsp {

// Deterministic operation-count limit standing in for "runs forever".
// Counts priority-queue pushes/pops and edge relaxations.
struct StepBudget {
    uint64_t limit = UINT64_MAX;
    uint64_t used = 0;

    StepBudget() = default;
    explicit StepBudget(uint64_t lim) : limit(lim) {}

    void tick(uint64_t k = 1) { used += k; }
    void check() const {
        if (used > limit) throw BudgetExhausted("step budget exhausted");
    }
};

struct ShortestPathTree {
    static constexpr int kNoParent = -1;

    int source = 0;
    std::vector<Weight> dist;      // valid only where reachable
    std::vector<int> parent_edge;  // kNoParent at source / unreachable
    std::vector<char> reached;

    ShortestPathTree() = default;
    ShortestPathTree(int n, int s)
        : source(s),
          dist(static_cast<size_t>(n), 0),
          parent_edge(static_cast<size_t>(n), kNoParent),
          reached(static_cast<size_t>(n), 0) {
        reached[s] = 1;
    }

    bool reachable(int v) const { return reached[v] != 0; }
};

// Ordered cycle: edges[i] goes vertices[i] -> vertices[(i+1) % k].
struct NegativeCycle {
    std::vector<int> vertices;
    std::vector<int> edges;
    Weight weight = 0;
};

// Nonnegative-weight SSSP; throws NegativeWeightPresent on any w(e) < 0.
ShortestPathTree dijkstra(const Graph& g, int s, StepBudget* budget = nullptr);

// Exact distances from s restricted to the reachable set, or a negative cycle
// reachable from s. O(mn); serves as the test oracle throughout the project.
std::variant<ShortestPathTree, NegativeCycle> bellman_ford(const Graph& g, int s);

// Alternating Dijkstra / Bellman-Ford passes; returns phi(v) = dist_G(s,v)
// with w_phi(e) >= 0 for all e. Requires s to reach every vertex. Never
// terminates on negative cycles: surfaces as BudgetExhausted, or as the
// stronger NegativeCycleCertified once some vertex has entered the queue more
// than 2n+2 times (impossible for cycle-free inputs).
PriceFunction elim_neg(const Graph& g, int s, StepBudget& budget);

// Price function constant on each part making every edge nonnegative, given
// that parts are internally nonnegative and contract to a DAG (both checked).
PriceFunction fix_dag_edges(const Graph& g, const VertexPartition& p);

// k+1 rounds of (Dijkstra on G minus negative edges, then one relaxation of
// every negative edge). Estimates are exact for every vertex whose shortest
// path uses at most k negative edges; everywhere dist(s,v) <= est <= initial.
std::vector<Weight> sp_with_few_neg_edges(const Graph& g, int s, int k);

// Distance value used for unreachable entries in raw estimate vectors.
inline constexpr Weight kNoDist = Weight(1) << 124;

}  // namespace nwsp
