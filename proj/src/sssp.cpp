#include "nwsp/sssp.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace nwsp {

namespace {

using HeapEntry = std::pair<Weight, int>;
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>>;

void require_nonnegative(const Graph& g) {
    if (g.has_negative_edge())
        throw NegativeWeightPresent("graph has a negative edge weight");
}

}  // namespace

ShortestPathTree dijkstra(const Graph& g, int s, StepBudget* budget) {
    require_nonnegative(g);
    const int n = g.n();
    ShortestPathTree t(n, s);
    std::vector<Weight> d(static_cast<size_t>(n), kNoDist);
    std::vector<char> done(static_cast<size_t>(n), 0);
    d[s] = 0;
    MinHeap q;
    q.push({0, s});
    if (budget) budget->tick();
    while (!q.empty()) {
        if (budget) budget->check();
        auto [dv, v] = q.top();
        q.pop();
        if (budget) budget->tick();
        if (done[v] || dv != d[v]) continue;
        done[v] = 1;
        for (int e : g.out_edges(v)) {
            if (budget) budget->tick();
            int x = g.dst(e);
            Weight nd = dv + g.weight(e);
            if (nd < d[x]) {
                d[x] = nd;
                t.parent_edge[x] = e;
                q.push({nd, x});
                if (budget) budget->tick();
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (d[v] != kNoDist) {
            t.reached[v] = 1;
            t.dist[v] = d[v];
        }
    }
    t.dist[s] = 0;
    t.parent_edge[s] = ShortestPathTree::kNoParent;
    return t;
}

namespace {

// Builds an ordered NegativeCycle from parent pointers, starting inside the
// parent-graph cycle at vertex x.
NegativeCycle collect_parent_cycle(const Graph& g, const std::vector<int>& parent_edge, int x) {
    std::vector<int> vs, es;
    int cur = x;
    do {
        int e = parent_edge[cur];
        vs.push_back(cur);
        es.push_back(e);
        cur = g.src(e);
    } while (cur != x);
    std::reverse(vs.begin(), vs.end());
    std::reverse(es.begin(), es.end());
    std::rotate(es.begin(), es.begin() + 1, es.end());

    NegativeCycle c;
    c.vertices = std::move(vs);
    c.edges = std::move(es);
    for (size_t i = 0; i < c.edges.size(); ++i) {
        int e = c.edges[i];
        int from = c.vertices[i];
        int to = c.vertices[(i + 1) % c.vertices.size()];
        if (g.src(e) != from || g.dst(e) != to)
            throw InternalError("extracted cycle does not chain");
        c.weight += g.weight(e);
    }
    if (c.weight >= 0) throw InternalError("extracted parent cycle is not negative");
    return c;
}

}  // namespace

std::variant<ShortestPathTree, NegativeCycle> bellman_ford(const Graph& g, int s) {
    const int n = g.n();
    const int m = g.m();
    std::vector<Weight> d(static_cast<size_t>(n), kNoDist);
    std::vector<int> parent(static_cast<size_t>(n), ShortestPathTree::kNoParent);
    d[s] = 0;

    bool changed = true;
    for (int round = 0; round < n - 1 && changed; ++round) {
        changed = false;
        for (int e = 0; e < m; ++e) {
            if (d[g.src(e)] == kNoDist) continue;
            Weight nd = d[g.src(e)] + g.weight(e);
            if (nd < d[g.dst(e)]) {
                d[g.dst(e)] = nd;
                parent[g.dst(e)] = e;
                changed = true;
            }
        }
    }

    if (changed) {
        // Detection round: any further improvement proves a reachable cycle.
        std::vector<int> hot;
        for (int e = 0; e < m; ++e) {
            if (d[g.src(e)] == kNoDist) continue;
            if (d[g.src(e)] + g.weight(e) < d[g.dst(e)]) {
                d[g.dst(e)] = d[g.src(e)] + g.weight(e);
                parent[g.dst(e)] = e;
                hot.push_back(g.dst(e));
            }
        }
        std::vector<int> seen(static_cast<size_t>(n), -1);
        for (size_t i = 0; i < hot.size(); ++i) {
            int cur = hot[i];
            int stamp = static_cast<int>(i);
            while (cur != s && parent[cur] != ShortestPathTree::kNoParent) {
                if (seen[cur] == stamp) return collect_parent_cycle(g, parent, cur);
                seen[cur] = stamp;
                cur = g.src(parent[cur]);
            }
        }
        throw InternalError("bellman_ford: relaxation in detection round but no cycle found");
    }

    ShortestPathTree t(n, s);
    for (int v = 0; v < n; ++v) {
        if (d[v] != kNoDist) {
            t.reached[v] = 1;
            t.dist[v] = d[v];
            t.parent_edge[v] = parent[v];
        }
    }
    t.parent_edge[s] = ShortestPathTree::kNoParent;
    return t;
}

PriceFunction elim_neg(const Graph& g, int s, StepBudget& budget) {
    const int n = g.n();
    const uint64_t add_cap = 2 * static_cast<uint64_t>(n) + 2;

    std::vector<Weight> d(static_cast<size_t>(n), kNoDist);
    std::vector<char> in_q(static_cast<size_t>(n), 0);
    std::vector<char> is_marked(static_cast<size_t>(n), 0);
    std::vector<uint32_t> adds(static_cast<size_t>(n), 0);
    std::vector<int> marked;
    MinHeap q;
    int live = 0;

    auto push_improved = [&](int x, Weight nd) {
        d[x] = nd;
        if (!in_q[x]) {
            in_q[x] = 1;
            ++live;
        }
        if (++adds[x] > add_cap)
            throw NegativeCycleCertified(
                "queue-addition count exceeds the cycle-free bound; negative cycle present");
        q.push({nd, x});
        budget.tick();
    };

    d[s] = 0;
    push_improved(s, 0);
    adds[s] = 0;  // the initial insertion of s is not an improvement

    while (true) {
        // Dijkstra phase: settle everything over nonnegative edges.
        while (live > 0) {
            budget.check();
            auto [dv, v] = q.top();
            q.pop();
            budget.tick();
            if (!in_q[v] || dv != d[v]) continue;
            in_q[v] = 0;
            --live;
            if (is_marked[v]) continue;
            is_marked[v] = 1;
            marked.push_back(v);
            for (int e : g.out_edges(v)) {
                budget.tick();
                Weight w = g.weight(e);
                if (w < 0) continue;
                int x = g.dst(e);
                if (dv + w < d[x]) push_improved(x, dv + w);
            }
        }

        // Bellman-Ford phase: relax out-edges of marked vertices, then unmark.
        for (int v : marked) {
            budget.check();
            for (int e : g.out_edges(v)) {
                budget.tick();
                int x = g.dst(e);
                Weight nd = d[v] + g.weight(e);
                if (nd < d[x]) push_improved(x, nd);
            }
            is_marked[v] = 0;
        }
        marked.clear();

        if (live == 0) break;
    }

    return PriceFunction(std::move(d));
}

PriceFunction fix_dag_edges(const Graph& g, const VertexPartition& p) {
    const int n = g.n();
    const int k = static_cast<int>(p.parts.size());
    if (static_cast<int>(p.part_of.size()) != n || static_cast<int>(p.order.size()) != k)
        throw InvalidInput("fix_dag_edges: malformed partition");

    std::vector<int> rank(static_cast<size_t>(k), -1);
    for (int i = 0; i < k; ++i) {
        int part = p.order[i];
        if (part < 0 || part >= k || rank[part] != -1)
            throw InvalidInput("fix_dag_edges: order is not a permutation of parts");
        rank[part] = i;
    }

    std::vector<Weight> mu(static_cast<size_t>(k), 0);
    for (int e = 0; e < g.m(); ++e) {
        int pu = p.part_of[g.src(e)];
        int pv = p.part_of[g.dst(e)];
        Weight w = g.weight(e);
        if (pu == pv) {
            if (w < 0) throw NegativeIntraPartEdge("negative edge inside a part");
            continue;
        }
        if (rank[pu] > rank[pv]) throw PartitionNotDag("edge goes backward in the claimed order");
        if (w < 0 && w < mu[rank[pv]]) mu[rank[pv]] = w;
    }

    std::vector<Weight> m_of_rank(static_cast<size_t>(k), 0);
    for (int j = 1; j < k; ++j) m_of_rank[j] = m_of_rank[j - 1] + mu[j];

    PriceFunction phi(n);
    for (int v = 0; v < n; ++v) phi[v] = m_of_rank[rank[p.part_of[v]]];
    return phi;
}

std::vector<Weight> sp_with_few_neg_edges(const Graph& g, int s, int k) {
    const int n = g.n();
    std::vector<Weight> d(static_cast<size_t>(n), kNoDist);
    d[s] = 0;

    std::vector<int> neg_edges;
    for (int e = 0; e < g.m(); ++e)
        if (g.weight(e) < 0) neg_edges.push_back(e);

    std::vector<char> done(static_cast<size_t>(n), 0);
    for (int round = 0; round <= k; ++round) {
        // Dijkstra over nonnegative edges, seeded with the current estimates.
        MinHeap q;
        for (int v = 0; v < n; ++v) {
            done[v] = 0;
            if (d[v] != kNoDist) q.push({d[v], v});
        }
        while (!q.empty()) {
            auto [dv, v] = q.top();
            q.pop();
            if (done[v] || dv != d[v]) continue;
            done[v] = 1;
            for (int e : g.out_edges(v)) {
                Weight w = g.weight(e);
                if (w < 0) continue;
                int x = g.dst(e);
                if (dv + w < d[x]) {
                    d[x] = dv + w;
                    q.push({d[x], x});
                }
            }
        }
        for (int e : neg_edges) {
            if (d[g.src(e)] == kNoDist) continue;
            Weight nd = d[g.src(e)] + g.weight(e);
            if (nd < d[g.dst(e)]) d[g.dst(e)] = nd;
        }
    }
    return d;
}

}  // namespace nwsp
